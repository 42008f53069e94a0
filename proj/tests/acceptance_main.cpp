// Acceptance suite: one line per criterion, nonzero exit when any fails.
// argv[1] is the path to the framekit binary (used by the CLI determinism
// criterion).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "framekit/demos.hpp"
#include "framekit/gen.hpp"
#include "framekit/io.hpp"

using namespace framekit;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d. %s — %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!pass)
        ++g_failures;
}

std::string slack_str(double s) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3e", s);
    return buf;
}

bool demo_pair(const std::string& id, std::size_t dim, int per_field, double& worst) {
    bool ok = true;
    for (const Field f : {Field::Real, Field::Complex}) {
        const DemoReport rep = run_demo(id, 7, dim, f, Tolerances{}, per_field);
        ok = ok && rep.pass;
        if (std::isfinite(rep.max_slack))
            worst = std::max(worst, rep.max_slack);
    }
    return ok;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_command(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe)
        return {-1, ""};
    char buf[512];
    while (std::fgets(buf, sizeof(buf), pipe))
        out += buf;
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

// ---- criteria ----------------------------------------------------------

void criterion_1() { // atomic construction tightness
    double worst = -1e300;
    const bool ok = demo_pair("thm3.2", 12, 50, worst);
    report(1, "atomic construction tightness (thm3.2)", ok,
           "100 operators (real+complex), dims<=12, worst slack " + slack_str(worst) +
               " vs 1e-9");
}

void criterion_2() { // atomicity <-> lower bound verdict
    double worst = -1e300;
    const bool ok = demo_pair("thm3.3", 8, 100, worst);
    report(2, "atomicity equivalence (thm3.3)", ok,
           "200 pairs incl. 100 rank-deficient operators, zero disagreements required");
}

void criterion_3() { // two routes to the optimal lower constant
    double worst = -1e300;
    const bool ok = demo_pair("thm4.4", 8, 100, worst);
    report(3, "quotient vs pencil route (thm4.2/thm4.4)", ok,
           "200 instances, routes within 1e-6, PSD slack within 1e-10*||S||; worst " +
               slack_str(worst));
}

void criterion_4() { // Douglas three-way equivalence
    double worst = -1e300;
    const bool ok = demo_pair("douglas", 8, 100, worst);
    report(4, "factorization equivalence (douglas)", ok,
           "200 planted + 200 disjoint instances per run, factors within 1e-9");
}

void criterion_5() { // reconstruction accuracy
    Rng rng(500);
    double worst = 0.0;
    bool ok = true;
    int produced = 0;
    while (produced < 50) { // vector frames
        const Field field = produced % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 2 + rng.below(15); // dims <= 16
        const VectorFrame f(d, random_mat(rng, d, d + 1 + rng.below(6), field));
        if (frame_bounds(f).a_opt < 1e-6)
            continue;
        ++produced;
        const Mat sig = random_mat(rng, d, 1, field);
        const double err = norm(reconstruct(f, sig) - sig) / std::max(1e-300, norm(sig));
        worst = std::max(worst, err);
        ok = ok && err <= 1e-9;
    }
    produced = 0;
    while (produced < 50) { // fusion systems
        const Field field = produced % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 2 + rng.below(15);
        const FusionSystem w = gen::random_fusion_frame(rng, d, field);
        if (fusion_bounds(w).a_opt < 1e-6)
            continue;
        ++produced;
        const Mat sig = random_mat(rng, d, 1, field);
        const double err =
            norm(fusion_reconstruct(w, analysis(w, sig)) - sig) / std::max(1e-300, norm(sig));
        worst = std::max(worst, err);
        ok = ok && err <= 1e-9;
    }
    report(5, "reconstruction accuracy", ok,
           "100 frames/fusion frames, dims<=16, worst relative error " + slack_str(worst) +
               " vs 1e-9");
}

void criterion_6() { // partition construction floors
    double worst = -1e300;
    const bool uniform = demo_pair("thm4.6", 8, 50, worst);
    const bool weighted = demo_pair("cor4.7", 8, 50, worst);
    report(6, "partition construction (thm4.6/cor4.7)", uniform && weighted,
           "100 K-frames with random partitions, floors/ceilings within 1e-9; worst " +
               slack_str(worst));
}

void criterion_7() { // direct sums
    double worst = -1e300;
    const bool ok = demo_pair("thm4.9", 8, 50, worst);
    report(7, "direct sums (thm4.9)", ok,
           "100 paired systems, certified envelope within 1e-9; worst " + slack_str(worst));
}

void criterion_8() { // operator algebra
    double worst = -1e300;
    const bool ok = demo_pair("thm4.10", 8, 50, worst);
    report(8, "operator combinations (thm4.10)", ok,
           "100 instances with up to 4 operators, certified <= actual + 1e-8; worst " +
               slack_str(worst));
}

void criterion_9() { // intersections
    double worst = -1e300;
    const bool bessel = demo_pair("lem4.11", 8, 50, worst);
    const bool pv = demo_pair("thm4.12", 8, 50, worst);
    const bool restricted = demo_pair("thm4.13", 8, 50, worst);
    report(9, "intersections (lem4.11/thm4.12/thm4.13)", bessel && pv && restricted,
           "Bessel non-increasing and both lower inequalities on 100-vector sweeps; worst " +
               slack_str(worst));
}

void criterion_10(const char* binary) { // CLI determinism
    if (!binary) {
        report(10, "CLI determinism", false, "no framekit binary path supplied");
        return;
    }
    bool ok = true;
    std::string detail = "every id run twice with --seed 7 --dim 8";
    for (const std::string& id : demo_ids()) {
        const std::string cmd =
            std::string(binary) + " demo " + id + " --seed 7 --dim 8";
        const RunResult first = run_command(cmd);
        const RunResult second = run_command(cmd);
        if (first.exit_code != 0 || second.exit_code != 0) {
            ok = false;
            detail = id + " exited nonzero";
            break;
        }
        if (first.output != second.output) {
            ok = false;
            detail = id + " produced differing outputs";
            break;
        }
        if (first.output.find("verdict: PASS") == std::string::npos) {
            ok = false;
            detail = id + " did not pass";
            break;
        }
    }
    report(10, "CLI determinism", ok, detail);
}

void exit_code_contract(const char* binary) { // stable 0/1/2 CLI contract
    if (!binary) {
        report(11, "CLI exit-code contract", false, "no framekit binary path supplied");
        return;
    }
    const std::string dir = "/tmp/framekit_acceptance";
    std::system(("mkdir -p " + dir).c_str());
    const std::string bin(binary);

    // Parseval decomposition of R^2
    FusionSystem parseval(2, {{Subspace::span(Mat({{1.0}, {0.0}}, Field::Real)), 1.0},
                              {Subspace::span(Mat({{0.0}, {1.0}}, Field::Real)), 1.0}});
    save_document(from_fusion_system(parseval), dir + "/parseval.json");
    // single coordinate line: not a fusion frame of R^2
    FusionSystem line(2, {{Subspace::span(Mat({{1.0}, {0.0}}, Field::Real)), 1.0}});
    save_document(from_fusion_system(line), dir + "/line.json");
    save_document(from_operator(from_diag({1.0, 0.0}), 2), dir + "/k10.json");
    save_document(from_operator(Mat::col_vec({1.0, 1.0}, Field::Real), 2), dir + "/sig.json");
    {
        FILE* f = std::fopen((dir + "/garbage.json").c_str(), "w");
        std::fputs("{not even json", f);
        std::fclose(f);
    }
    // a line that fails to commute with span{e1}
    const double s = 1.0 / std::sqrt(2.0);
    save_document(from_operator(Mat::col_vec({s, s}, Field::Real), 2), dir + "/diag_line.json");

    struct Case {
        std::string cmd;
        int want;
    };
    const std::vector<Case> cases = {
        {bin + " bounds " + dir + "/parseval.json", 0},
        {bin + " bounds " + dir + "/line.json", 1},
        {bin + " bounds " + dir + "/line.json --k " + dir + "/k10.json", 0},
        {bin + " bounds " + dir + "/nonexistent.json", 2},
        {bin + " bounds " + dir + "/garbage.json", 2},
        {bin + " demo not-a-theorem --seed 1 --dim 4", 2},
        {bin + " reconstruct " + dir + "/line.json " + dir + "/sig.json", 1},
        {bin + " construct intersect --system " + dir + "/line.json --subspace " + dir +
             "/diag_line.json -o " + dir + "/out.json",
         1},
    };
    bool ok = true;
    std::string detail = "verified 0/1/2 across bounds, demo, reconstruct, construct";
    for (const Case& c : cases) {
        const RunResult res = run_command(c.cmd);
        if (res.exit_code != c.want) {
            ok = false;
            detail = "`" + c.cmd + "` exited " + std::to_string(res.exit_code) + ", expected " +
                     std::to_string(c.want);
            break;
        }
    }
    // the intersect failure must cite the property id
    if (ok) {
        const RunResult res = run_command(cases.back().cmd);
        if (res.output.find("lem4.11") == std::string::npos) {
            ok = false;
            detail = "hypothesis failure did not cite the property id";
        }
    }

    // emitted documents re-verify through `bounds`
    if (ok) {
        const RunResult built = run_command(bin + " construct atomic --k " + dir +
                                            "/k10.json -o " + dir + "/atomic.json");
        const RunResult check = run_command(bin + " bounds " + dir + "/atomic.json --k " + dir +
                                            "/k10.json");
        if (built.exit_code != 0 || check.exit_code != 0 ||
            check.output.find("A_opt: 1") == std::string::npos) {
            ok = false;
            detail = "constructed atomic document failed re-verification";
        }
    }
    if (ok) {
        // {e1, e1, e2} split as {1,2},{3}
        Mat cols({{1.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}, Field::Real);
        save_document(from_vector_frame(VectorFrame(2, cols)), dir + "/fr.json");
        save_document(from_operator(Mat::identity(2, Field::Real), 2), dir + "/id2.json");
        const RunResult built =
            run_command(bin + " construct partition --frame " + dir + "/fr.json --k " + dir +
                        "/id2.json --cells \"1,2;3\" -o " + dir + "/part.json");
        const RunResult check = run_command(bin + " bounds " + dir + "/part.json");
        if (built.exit_code != 0 || check.exit_code != 0) {
            ok = false;
            detail = "constructed partition document failed re-verification";
        }
    }
    report(11, "CLI exit-code contract", ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(argc > 1 ? argv[1] : nullptr);
    exit_code_contract(argc > 1 ? argv[1] : nullptr);

    std::printf("%s: %d/11 checks passed\n", g_failures == 0 ? "OK" : "FAILED",
                11 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
