#include "sftlab/matrix.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "sftlab/errors.hpp"

namespace sft {

TransitionMatrix TransitionMatrix::validate(const std::vector<std::vector<int>>& raw) {
    const int n = static_cast<int>(raw.size());
    if (n == 0) throw NonSquareError("matrix is empty");
    for (const auto& row : raw) {
        if (static_cast<int>(row.size()) != n)
            throw NonSquareError("matrix is not square");
    }
    TransitionMatrix m;
    m.size_ = n;
    m.bits_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int v = raw[i][j];
            if (v != 0 && v != 1) throw Error("matrix entries must be 0 or 1");
            m.bits_[static_cast<size_t>(i) * n + j] = static_cast<char>(v);
        }
    }
    for (int i = 0; i < n; ++i) {
        bool row = false, col = false;
        for (int j = 0; j < n; ++j) {
            row |= m.bits_[static_cast<size_t>(i) * n + j] != 0;
            col |= m.bits_[static_cast<size_t>(j) * n + i] != 0;
        }
        if (!row) throw EmptyRowOrColumnError("row " + std::to_string(i + 1) + " is zero");
        if (!col) throw EmptyRowOrColumnError("column " + std::to_string(i + 1) + " is zero");
    }

    // Strong connectivity by forward/backward reachability from node 1.
    auto reach = [&](bool forward) {
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int b = 0; b < n; ++b) {
                bool edge = forward ? m.bits_[static_cast<size_t>(a) * n + b]
                                    : m.bits_[static_cast<size_t>(b) * n + a];
                if (edge && !seen[b]) {
                    seen[b] = 1;
                    q.push(b);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    };
    m.irreducible_ = reach(true) && reach(false);

    m.non_permutation_ = false;
    for (int i = 0; i < n && !m.non_permutation_; ++i) {
        int row = 0, col = 0;
        for (int j = 0; j < n; ++j) {
            row += m.bits_[static_cast<size_t>(i) * n + j];
            col += m.bits_[static_cast<size_t>(j) * n + i];
        }
        if (row >= 2 || col >= 2) m.non_permutation_ = true;
    }
    return m;
}

bool TransitionMatrix::admissible_word(const Word& w) const {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (!admissible(w[i], w[i + 1])) return false;
    return true;
}

bool TransitionMatrix::admissible_cycle(const Word& w) const {
    if (w.empty()) return false;
    return admissible_word(w) && admissible(w.back(), w.front());
}

std::uint64_t TransitionMatrix::trace_power(int p) const {
    const int n = size_;
    std::vector<std::uint64_t> acc(static_cast<size_t>(n) * n, 0), cur(bits_.begin(), bits_.end());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc[static_cast<size_t>(i) * n + j] = (i == j);
    std::vector<std::uint64_t> tmp(static_cast<size_t>(n) * n);
    auto mul = [&](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        std::fill(tmp.begin(), tmp.end(), 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                std::uint64_t v = a[static_cast<size_t>(i) * n + k];
                if (!v) continue;
                for (int j = 0; j < n; ++j)
                    tmp[static_cast<size_t>(i) * n + j] += v * b[static_cast<size_t>(k) * n + j];
            }
        return tmp;
    };
    int e = p;
    while (e > 0) {
        if (e & 1) acc = mul(acc, cur);
        cur = mul(cur, cur);
        e >>= 1;
    }
    std::uint64_t tr = 0;
    for (int i = 0; i < n; ++i) tr += acc[static_cast<size_t>(i) * n + i];
    return tr;
}

std::vector<Word> TransitionMatrix::words(int length) const {
    std::vector<Word> out;
    if (length <= 0) {
        out.push_back({});
        return out;
    }
    Word cur;
    cur.reserve(length);
    // iterative DFS in lexicographic order
    std::vector<Symbol> stack{0};  // next symbol to try at each depth
    while (!stack.empty()) {
        Symbol& next = stack.back();
        ++next;
        if (next > size_) {
            stack.pop_back();
            if (!cur.empty()) cur.pop_back();
            continue;
        }
        if (!cur.empty() && !admissible(cur.back(), next)) continue;
        cur.push_back(next);
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            cur.pop_back();
        } else {
            stack.push_back(0);
        }
    }
    return out;
}

Word TransitionMatrix::connect(Symbol a, Symbol b) const {
    std::vector<int> prev(size_ + 1, 0);
    std::vector<char> seen(size_ + 1, 0);
    std::queue<Symbol> q;
    q.push(a);
    seen[a] = 1;
    if (a == b) return {a};
    while (!q.empty()) {
        Symbol s = q.front();
        q.pop();
        for (Symbol t = 1; t <= size_; ++t) {
            if (!admissible(s, t) || seen[t]) continue;
            seen[t] = 1;
            prev[t] = s;
            if (t == b) {
                Word path{t};
                while (t != a) {
                    t = prev[t];
                    path.push_back(t);
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(t);
        }
    }
    throw Error("no admissible path from " + std::to_string(a) + " to " + std::to_string(b));
}

TransitionMatrix TransitionMatrix::transpose() const {
    std::vector<std::vector<int>> raw(size_, std::vector<int>(size_, 0));
    for (int i = 1; i <= size_; ++i)
        for (int j = 1; j <= size_; ++j) raw[j - 1][i - 1] = entry(i, j);
    return validate(raw);
}

std::vector<Word> TransitionMatrix::two_block_symbols() const {
    return words(2);
}

TransitionMatrix TransitionMatrix::two_block() const {
    auto syms = two_block_symbols();
    const int m = static_cast<int>(syms.size());
    std::vector<std::vector<int>> raw(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            raw[i][j] = (syms[i][1] == syms[j][0]) ? 1 : 0;
    return validate(raw);
}

}  // namespace sft
