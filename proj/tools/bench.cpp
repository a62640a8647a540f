// Compares the serial reference kernels against their OpenMP versions:
// periodic point enumeration and bundle verification.
#include <chrono>
#include <cstdio>

#include "sftlab/acoe.hpp"
#include "sftlab/asymptotics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace sft;
using clk = std::chrono::steady_clock;

static double ms(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serial code\n");
#endif

    auto golden = TransitionMatrix::validate({{1, 1}, {1, 0}});
    auto full2 = TransitionMatrix::validate({{1, 1}, {1, 1}});

    std::printf("%-34s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "equal");

    for (int p : {18, 20, 22}) {
        auto t0 = clk::now();
        auto serial = enumerate_periodic_serial(full2, p);
        auto t1 = clk::now();
        auto parallel = enumerate_periodic(full2, p);
        auto t2 = clk::now();
        std::printf("%-34s %12.1f %12.1f %8s\n",
                    ("enumerate_periodic(full 2-shift," + std::to_string(p) + ")").c_str(),
                    ms(t0, t1), ms(t1, t2), serial == parallel ? "yes" : "NO");
    }

    // A conjugacy bundle over the golden mean shift with a generous family.
    auto [code, code_inv] = PointMap::two_block_code(golden);
    auto B = golden.two_block();
    AcoeBundle bundle{Dynamics{golden, 1},
                      Dynamics{B, 1},
                      code,
                      code_inv,
                      LocallyConstantFn::constant(golden, 1),
                      LocallyConstantFn::constant(B, 1),
                      PotentialCocycle::zero(golden),
                      PotentialCocycle::zero(B)};
    FamilyDescriptor fd{8, 4, 8};
    FamilyOptions opt;
    opt.sampled_pairs = 4000;
    opt.sampled_points = 800;
    auto fam = make_bundle_family(bundle, fd, opt);

    auto t0 = clk::now();
    auto rs = verify_acoe_serial(bundle, fam);
    auto t1 = clk::now();
    auto rp = verify_acoe(bundle, fam);
    auto t2 = clk::now();
    bool equal = rs.pass == rp.pass && rs.K1 == rp.K1 && rs.K2 == rp.K2 &&
                 rs.pairs_checked == rp.pairs_checked;
    for (size_t i = 0; i < rs.conditions.size(); ++i)
        equal = equal && rs.conditions[i].pass == rp.conditions[i].pass &&
                rs.conditions[i].checked == rp.conditions[i].checked &&
                rs.conditions[i].counterexample == rp.conditions[i].counterexample;
    std::printf("%-34s %12.1f %12.1f %8s\n", "verify_acoe(2-block conjugacy)", ms(t0, t1),
                ms(t1, t2), equal ? "yes" : "NO");
    return 0;
}
