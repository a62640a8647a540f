#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sft {

using Symbol = int;                 // alphabet symbols are 1..N
using Word = std::vector<Symbol>;   // finite block of symbols

// 0/1 transition matrix of a two-sided shift of finite type.
// Validated on construction: square, no zero row, no zero column.
class TransitionMatrix {
public:
    // Throws NonSquareError / EmptyRowOrColumnError on bad input.
    static TransitionMatrix validate(const std::vector<std::vector<int>>& raw);

    int size() const { return size_; }
    bool entry(Symbol i, Symbol j) const { return bits_[idx(i, j)]; }
    bool admissible(Symbol i, Symbol j) const { return entry(i, j); }
    bool admissible_word(const Word& w) const;
    // Adjacent pairs of the cyclic word w (including the wraparound).
    bool admissible_cycle(const Word& w) const;

    bool irreducible() const { return irreducible_; }
    bool non_permutation() const { return non_permutation_; }

    // Number of admissible cycles of length p with phase, i.e. trace(A^p).
    std::uint64_t trace_power(int p) const;

    // All admissible words of the given length, lexicographic order.
    std::vector<Word> words(int length) const;

    // Some admissible word leading from symbol a to symbol b, endpoints
    // included; shortest such path (BFS).  Matrices here never strand a
    // symbol, so a path always exists when the matrix is irreducible.
    Word connect(Symbol a, Symbol b) const;

    TransitionMatrix transpose() const;

    // Matrix of the standard 2-block recoding: symbols are the admissible
    // words of length 2 (ordered lexicographically, numbered from 1), with
    // (i,j) -> (k,l) allowed when j == k.
    TransitionMatrix two_block() const;
    // Admissible length-2 words in the order used by two_block().
    std::vector<Word> two_block_symbols() const;

    bool operator==(const TransitionMatrix& o) const {
        return size_ == o.size_ && bits_ == o.bits_;
    }

private:
    TransitionMatrix() = default;
    int idx(Symbol i, Symbol j) const { return (i - 1) * size_ + (j - 1); }

    int size_ = 0;
    std::vector<char> bits_;
    bool irreducible_ = false;
    bool non_permutation_ = false;
};

}  // namespace sft
