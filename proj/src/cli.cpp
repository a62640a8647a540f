#include "sftlab/cli.hpp"

#include <json.hpp>
#include <sstream>

#include "sftlab/asymptotics.hpp"
#include "sftlab/errors.hpp"
#include "sftlab/io.hpp"
#include "sftlab/relations.hpp"

namespace sft {

namespace {

FamilyDescriptor apply_overrides(FamilyDescriptor fd, const SessionConfig& cfg) {
    if (cfg.radius) fd.radius = *cfg.radius;
    if (cfg.tails) fd.tail_period = *cfg.tails;
    if (cfg.periods) fd.period_bound = *cfg.periods;
    return fd;
}

FamilyDescriptor session_family(const SessionConfig& cfg) {
    return apply_overrides(FamilyDescriptor{}, cfg);
}

Point parse_admissible_point(const TransitionMatrix& A, const std::string& literal) {
    Point x = Point::parse(literal);
    if (!admissible_point(A, x))
        throw ParseError("inadmissible point literal '" + literal + "'");
    return x;
}

std::string level_str(const std::optional<Index>& lvl) {
    return lvl ? std::to_string(*lvl) : std::string("not equivalent");
}

nlohmann::ordered_json points_json(const std::vector<Point>& pts) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : pts) arr.push_back(p.to_string());
    return arr;
}

CmdResult input_error(const std::string& msg) {
    return CmdResult{2, "error: " + msg + "\n"};
}

}  // namespace

CmdResult cmd_matrix_info(const std::string& matrix_path, const SessionConfig& cfg) {
    try {
        auto A = load_matrix(matrix_path);
        Index P = cfg.periods.value_or(6);
        std::vector<std::uint64_t> traces;
        for (Index p = 1; p <= P; ++p) traces.push_back(A.trace_power(static_cast<int>(p)));
        if (cfg.structured) {
            nlohmann::ordered_json j;
            j["size"] = A.size();
            j["irreducible"] = A.irreducible();
            j["non_permutation"] = A.non_permutation();
            j["traces"] = traces;
            return CmdResult{0, j.dump(2) + "\n"};
        }
        std::ostringstream os;
        os << "size: " << A.size() << "\n";
        os << (A.irreducible() ? "irreducible" : "not irreducible")
           << (A.non_permutation() ? ", non-permutation" : ", permutation") << "\n";
        os << "periodic point counts (p=1.." << P << "):";
        for (auto t : traces) os << " " << t;
        os << "\n";
        return CmdResult{0, os.str()};
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

CmdResult cmd_equiv(const std::string& matrix_path, const std::string& point_x,
                    const std::string& point_z, const SessionConfig& cfg) {
    try {
        auto A = load_matrix(matrix_path);
        Point x = parse_admissible_point(A, point_x);
        Point z = parse_admissible_point(A, point_z);
        auto s = stable_level(x, z);
        auto u = unstable_level(x, z);
        auto a = asymptotic_level(x, z);
        auto c = make_constants(cfg.lambda0);
        if (cfg.structured) {
            nlohmann::ordered_json j;
            j["stable"] = s ? nlohmann::ordered_json(*s) : nlohmann::ordered_json(nullptr);
            j["unstable"] = u ? nlohmann::ordered_json(*u) : nlohmann::ordered_json(nullptr);
            j["asymptotic"] = a ? nlohmann::ordered_json(*a) : nlohmann::ordered_json(nullptr);
            j["metric"] = rational_to_string(metric(x, z, c));
            return CmdResult{0, j.dump(2) + "\n"};
        }
        std::ostringstream os;
        os << "stable level: " << level_str(s) << "\n";
        os << "unstable level: " << level_str(u) << "\n";
        os << "asymptotic level: " << level_str(a) << "\n";
        os << "metric: " << rational_to_string(metric(x, z, c)) << "\n";
        return CmdResult{0, os.str()};
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

CmdResult cmd_limits(const std::string& matrix_path, const std::string& point,
                     const SessionConfig& cfg) {
    try {
        auto A = load_matrix(matrix_path);
        Point x = parse_admissible_point(A, point);
        auto data = limit_data(x);
        auto om = omega_limit(x);
        auto al = alpha_limit(x);
        bool rec = classify_recurrent(x);
        if (cfg.structured) {
            nlohmann::ordered_json j;
            j["forward_limit"] = data.forward_limit.to_string();
            j["forward_period"] = data.forward_period;
            j["backward_limit"] = data.backward_limit.to_string();
            j["backward_period"] = data.backward_period;
            j["least_asymptotic_period"] = data.least_asymptotic_period;
            j["omega"] = points_json(om);
            j["alpha"] = points_json(al);
            j["recurrent"] = rec;
            j["periodic"] = x.periodic();
            return CmdResult{0, j.dump(2) + "\n"};
        }
        std::ostringstream os;
        os << "forward limit: " << data.forward_limit.to_string() << " (period "
           << data.forward_period << ")\n";
        os << "backward limit: " << data.backward_limit.to_string() << " (period "
           << data.backward_period << ")\n";
        os << "least asymptotic period: " << data.least_asymptotic_period << "\n";
        os << "omega set (" << om.size() << "):\n";
        for (const auto& p : om) os << "  " << p.to_string() << "\n";
        os << "alpha set (" << al.size() << "):\n";
        for (const auto& p : al) os << "  " << p.to_string() << "\n";
        os << (rec ? "recurrent (periodic)" : "not recurrent") << "\n";
        return CmdResult{0, os.str()};
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

CmdResult cmd_verify(const std::string& bundle_path, const SessionConfig& cfg) {
    std::optional<LoadedBundle> parsed;
    try {
        parsed = load_bundle(bundle_path);
    } catch (const Error& e) {
        return input_error(e.what());
    }
    LoadedBundle& loaded = *parsed;
    FamilyDescriptor fd = apply_overrides(loaded.family, cfg);
    auto fam = make_bundle_family(loaded.bundle, fd);
    auto rep = verify_acoe(loaded.bundle, fam);

    std::string cls = "none";
    std::string cls_detail;
    if (rep.pass) {
        try {
            auto fc = flip_from_ppacoe(loaded.bundle, fam, fd.period_bound);
            switch (fc.cls) {
                case FlipClass::Conjugacy:
                    cls = "Conjugacy(+1)";
                    break;
                case FlipClass::Flip:
                    cls = "Flip(-1)";
                    break;
                case FlipClass::Undetermined:
                    cls = "Undetermined";
                    cls_detail = "d1 does not vanish on the family";
                    break;
            }
        } catch (const NotPeriodicPreservingError& e) {
            cls = "NotPeriodicPreserving";
            cls_detail = e.what();
        } catch (const ConditionViolatedError& e) {
            cls = "ConditionViolated";
            cls_detail = e.what();
        }
    }

    if (cfg.structured) {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(render_report_json(rep));
        j["family_descriptor"] = {{"radius", fd.radius},
                                  {"tail_period", fd.tail_period},
                                  {"period_bound", fd.period_bound}};
        j["classification"] = cls;
        if (!cls_detail.empty()) j["classification_detail"] = cls_detail;
        return CmdResult{rep.pass ? 0 : 1, j.dump(2) + "\n"};
    }
    std::ostringstream os;
    os << render_report_text(rep);
    os << "classification: " << cls << (cls_detail.empty() ? "" : " (" + cls_detail + ")") << "\n";
    return CmdResult{rep.pass ? 0 : 1, os.str()};
}

}  // namespace sft
