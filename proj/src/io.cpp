#include "sftlab/io.hpp"

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sftlab/errors.hpp"

namespace sft {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

long long to_int(const std::string& t, int line_no) {
    try {
        size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + t + "'", line_no);
    }
}

}  // namespace

TransitionMatrix parse_matrix(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (!tokens(line).empty()) return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("matrix file is empty");
    auto head = tokens(line);
    if (head.size() != 1) throw ParseError("expected the matrix size alone", line_no);
    int n = static_cast<int>(to_int(head[0], line_no));
    if (n <= 0) throw ParseError("matrix size must be positive", line_no);
    std::vector<std::vector<int>> raw;
    for (int i = 0; i < n; ++i) {
        if (!next_line())
            throw ParseError("matrix row " + std::to_string(i + 1) + " is missing", line_no);
        auto ts = tokens(line);
        if (static_cast<int>(ts.size()) != n)
            throw ParseError("matrix row " + std::to_string(i + 1) + " has " +
                                 std::to_string(ts.size()) + " entries, expected " +
                                 std::to_string(n),
                             line_no);
        std::vector<int> row;
        for (const auto& t : ts) row.push_back(static_cast<int>(to_int(t, line_no)));
        raw.push_back(std::move(row));
    }
    try {
        return TransitionMatrix::validate(raw);
    } catch (const Error& e) {
        throw ParseError(e.what(), line_no);
    }
}

TransitionMatrix load_matrix(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_matrix(in);
}

LocallyConstantFn parse_table(std::istream& in, const TransitionMatrix& A) {
    std::string line;
    int line_no = 0, radius = -1;
    std::map<Word, long long> table;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto ts = tokens(line);
        if (ts.empty()) continue;
        if (radius < 0) {
            if (ts.size() != 1) throw ParseError("expected the window radius alone", line_no);
            radius = static_cast<int>(to_int(ts[0], line_no));
            continue;
        }
        if (ts.size() < 3 || ts[ts.size() - 2] != "->")
            throw ParseError("expected 'w_1 ... w_n -> value'", line_no);
        Word w;
        for (size_t i = 0; i + 2 < ts.size(); ++i)
            w.push_back(static_cast<Symbol>(to_int(ts[i], line_no)));
        table[w] = to_int(ts.back(), line_no);
    }
    if (radius < 0) throw ParseError("table file is empty");
    try {
        return LocallyConstantFn(A, radius, std::move(table));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

LocallyConstantFn load_table(const std::string& path, const TransitionMatrix& A) {
    auto in = open_or_throw(path);
    return parse_table(in, A);
}

namespace {

struct BundleParser {
    std::istream& in;
    std::string base_dir;
    std::string line;
    int line_no = 0;

    bool next(std::vector<std::string>& ts) {
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            ts = tokens(line);
            if (!ts.empty()) return true;
        }
        return false;
    }

    std::string resolve(const std::string& p) const {
        std::filesystem::path fp(p);
        if (fp.is_absolute() || base_dir.empty()) return p;
        return (std::filesystem::path(base_dir) / fp).string();
    }

    // Rule lines "s ... -> s" until the terminator token.
    std::map<Word, Symbol> rule_block(const std::string& terminator) {
        std::map<Word, Symbol> rule;
        std::vector<std::string> ts;
        while (next(ts)) {
            if (ts.size() == 1 && ts[0] == terminator) return rule;
            if (ts.size() < 3 || ts[ts.size() - 2] != "->")
                throw ParseError("expected 'w_1 ... w_n -> symbol' or '" + terminator + "'",
                                 line_no);
            Word w;
            for (size_t i = 0; i + 2 < ts.size(); ++i)
                w.push_back(static_cast<Symbol>(to_int(ts[i], line_no)));
            rule[w] = static_cast<Symbol>(to_int(ts.back(), line_no));
        }
        throw ParseError("missing '" + terminator + "'", line_no);
    }

    std::map<Word, long long> value_block() {
        std::map<Word, long long> table;
        std::vector<std::string> ts;
        while (next(ts)) {
            if (ts.size() == 1 && ts[0] == "end") return table;
            if (ts.size() < 3 || ts[ts.size() - 2] != "->")
                throw ParseError("expected 'w_1 ... w_n -> value' or 'end'", line_no);
            Word w;
            for (size_t i = 0; i + 2 < ts.size(); ++i)
                w.push_back(static_cast<Symbol>(to_int(ts[i], line_no)));
            table[w] = to_int(ts.back(), line_no);
        }
        throw ParseError("missing 'end'", line_no);
    }

    // Stage list between "map <name>" and "end"; stages apply top first.
    PointMap map_block(const TransitionMatrix& source, const TransitionMatrix& expected_target) {
        std::vector<PointMap> pipeline;
        TransitionMatrix cur = source;
        std::vector<std::string> ts;
        while (next(ts)) {
            if (ts.size() == 1 && ts[0] == "end") {
                if (pipeline.empty()) throw ParseError("empty map block", line_no);
                if (!(cur == expected_target))
                    throw ParseError("map target matrix does not match the declared system",
                                     line_no);
                // compose() applies right-to-left; the file lists stages in
                // application order.
                std::reverse(pipeline.begin(), pipeline.end());
                return pipeline.size() == 1 ? pipeline.front() : PointMap::compose(pipeline);
            }
            if (ts[0] == "identity" && ts.size() == 1) {
                pipeline.push_back(PointMap::identity(cur));
            } else if (ts[0] == "reversal" && ts.size() == 1) {
                pipeline.push_back(PointMap::reversal(cur));
                cur = pipeline.back().target();
            } else if (ts[0] == "shift" && ts.size() == 2) {
                pipeline.push_back(PointMap::shift_power(cur, to_int(ts[1], line_no)));
            } else if (ts[0] == "sliding_block" && (ts.size() == 3 || ts.size() == 5)) {
                int memory = static_cast<int>(to_int(ts[1], line_no));
                int anticipation = static_cast<int>(to_int(ts[2], line_no));
                TransitionMatrix target = cur;
                if (ts.size() == 5) {
                    if (ts[3] != "target") throw ParseError("expected 'target <path>'", line_no);
                    target = load_matrix(resolve(ts[4]));
                }
                auto rule = rule_block("end_block");
                try {
                    pipeline.push_back(
                        PointMap::sliding_block(cur, target, memory, anticipation, std::move(rule)));
                } catch (const Error& e) {
                    throw ParseError(e.what(), line_no);
                }
                cur = pipeline.back().target();
            } else {
                throw ParseError("unknown map stage '" + ts[0] + "'", line_no);
            }
        }
        throw ParseError("missing 'end' after map block", line_no);
    }

    LocallyConstantFn fn_block(const std::vector<std::string>& ts, const TransitionMatrix& A) {
        if (ts.size() == 3 && ts[1] == "constant")
            return LocallyConstantFn::constant(A, to_int(ts[2], line_no));
        if (ts.size() == 3 && ts[1] == "table") {
            int radius = static_cast<int>(to_int(ts[2], line_no));
            auto table = value_block();
            try {
                return LocallyConstantFn(A, radius, std::move(table));
            } catch (const Error& e) {
                throw ParseError(e.what(), line_no);
            }
        }
        throw ParseError("expected '" + ts[0] + " constant <v>' or '" + ts[0] + " table <k>'",
                         line_no);
    }

    PotentialCocycle cocycle_block(const std::vector<std::string>& ts, const TransitionMatrix& A) {
        if (ts.size() == 2 && ts[1] == "zero") return PotentialCocycle::zero(A);
        if (ts.size() == 3 && ts[1] == "potential") {
            int radius = static_cast<int>(to_int(ts[2], line_no));
            auto table = value_block();
            try {
                return PotentialCocycle(LocallyConstantFn(A, radius, std::move(table)));
            } catch (const Error& e) {
                throw ParseError(e.what(), line_no);
            }
        }
        throw ParseError("expected '" + ts[0] + " zero' or '" + ts[0] + " potential <k>'", line_no);
    }
};

}  // namespace

LoadedBundle parse_bundle(std::istream& in, const std::string& base_dir) {
    BundleParser p{in, base_dir};
    std::optional<TransitionMatrix> mx, my;
    int dir_x = 1, dir_y = 1;
    std::optional<PointMap> h, h_inv;
    std::optional<LocallyConstantFn> c1, c2;
    std::optional<PotentialCocycle> d1, d2;
    FamilyDescriptor fd;

    std::vector<std::string> ts;
    while (p.next(ts)) {
        const std::string& key = ts[0];
        if (key == "matrix_x" && ts.size() == 2) {
            mx = load_matrix(p.resolve(ts[1]));
        } else if (key == "matrix_y" && ts.size() == 2) {
            my = load_matrix(p.resolve(ts[1]));
        } else if (key == "direction_x" && ts.size() == 2) {
            dir_x = static_cast<int>(to_int(ts[1], p.line_no));
        } else if (key == "direction_y" && ts.size() == 2) {
            dir_y = static_cast<int>(to_int(ts[1], p.line_no));
        } else if (key == "map" && ts.size() == 2) {
            if (!mx || !my) throw ParseError("declare matrices before maps", p.line_no);
            if (ts[1] == "h")
                h = p.map_block(*mx, *my);
            else if (ts[1] == "h_inv")
                h_inv = p.map_block(*my, *mx);
            else
                throw ParseError("map name must be 'h' or 'h_inv'", p.line_no);
        } else if (key == "c1") {
            if (!mx) throw ParseError("declare matrix_x before c1", p.line_no);
            c1 = p.fn_block(ts, *mx);
        } else if (key == "c2") {
            if (!my) throw ParseError("declare matrix_y before c2", p.line_no);
            c2 = p.fn_block(ts, *my);
        } else if (key == "d1") {
            if (!mx) throw ParseError("declare matrix_x before d1", p.line_no);
            d1 = p.cocycle_block(ts, *mx);
        } else if (key == "d2") {
            if (!my) throw ParseError("declare matrix_y before d2", p.line_no);
            d2 = p.cocycle_block(ts, *my);
        } else if (key == "family" && ts.size() == 4) {
            fd.radius = to_int(ts[1], p.line_no);
            fd.tail_period = to_int(ts[2], p.line_no);
            fd.period_bound = to_int(ts[3], p.line_no);
        } else {
            throw ParseError("unknown bundle line '" + p.line + "'", p.line_no);
        }
    }
    if (!mx || !my) throw ParseError("bundle misses matrix_x or matrix_y");
    if (!h || !h_inv) throw ParseError("bundle misses map h or h_inv");
    if (!c1 || !c2) throw ParseError("bundle misses c1 or c2");
    if (!d1 || !d2) throw ParseError("bundle misses d1 or d2");
    if (dir_x != 1 && dir_x != -1) throw ParseError("direction_x must be +1 or -1");
    if (dir_y != 1 && dir_y != -1) throw ParseError("direction_y must be +1 or -1");
    return LoadedBundle{AcoeBundle{Dynamics{*mx, dir_x}, Dynamics{*my, dir_y}, *h, *h_inv, *c1,
                                   *c2, *d1, *d2},
                        fd};
}

LoadedBundle load_bundle(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_bundle(in, std::filesystem::path(path).parent_path().string());
}

std::string render_report_text(const VerificationReport& rep) {
    std::ostringstream os;
    for (const auto& c : rep.conditions) {
        os << "condition " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.checked
           << " checks)";
        if (!c.pass) os << "\n  counterexample: " << c.counterexample;
        os << "\n";
    }
    os << "witness levels: K1=" << rep.K1 << " K2=" << rep.K2 << " K_n=[";
    for (Index n = 1; n <= 5; ++n) os << (n > 1 ? "," : "") << rep.K_n[static_cast<size_t>(n)];
    os << "] bound " << (rep.level_bound_ok ? "holds" : "VIOLATED") << "\n";
    os << "family: " << rep.points_checked << " points, " << rep.pairs_checked
       << " pairs, sufficiency radius " << rep.sufficiency_radius << "\n";
    os << "verdict: " << (rep.pass ? "PASS" : "FAIL") << " ("
       << (rep.exactly_verified ? "ExactlyVerified" : "VerifiedOnFamily") << ")\n";
    return os.str();
}

std::string render_report_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["conditions"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.conditions) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["checked"] = c.checked;
        if (!c.pass) cj["counterexample"] = c.counterexample;
        j["conditions"].push_back(cj);
    }
    j["witness"]["K1"] = rep.K1;
    j["witness"]["K2"] = rep.K2;
    j["witness"]["K_n"] = std::vector<Index>(rep.K_n.begin() + 1, rep.K_n.end());
    j["witness"]["level_bound_ok"] = rep.level_bound_ok;
    j["family"]["points"] = rep.points_checked;
    j["family"]["pairs"] = rep.pairs_checked;
    j["family"]["sufficiency_radius"] = rep.sufficiency_radius;
    j["mode"] = rep.exactly_verified ? "ExactlyVerified" : "VerifiedOnFamily";
    j["pass"] = rep.pass;
    return j.dump(2) + "\n";
}

}  // namespace sft
