// Compares the naive reference generator against the propagating DFS search,
// serial and OpenMP-parallel, on involutive-BE and QW enumeration.
//
//   ./search_bench [max_order] [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "qwalg/search.hpp"

using namespace qwalg;

namespace {

double run_timed(const char* label, int order, const SearchConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    ModelStream s = enumerate(cfg);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
    std::printf("%-28s order=%d  classes=%zu  labeled=%lld  nodes=%lld  %.3fs\n",
                label, order, s.models.size(), s.raw_models, s.nodes, dt);
    return dt;
}

double run_naive(const char* label, int order, const SearchConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    ModelStream s = enumerate_naive(cfg, /*force_unit_cells=*/true);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
    std::printf("%-28s order=%d  classes=%zu  labeled=%lld  nodes=%lld  %.3fs\n",
                label, order, s.models.size(), s.raw_models, s.nodes, dt);
    return dt;
}

} // namespace

int main(int argc, char** argv) {
    int max_order = argc > 1 ? std::atoi(argv[1]) : 5;
    int threads = argc > 2 ? std::atoi(argv[2]) : 0;

    SearchConfig base;
    base.satisfy = {Constraint{ClassId::InvolutiveBE}};

    std::printf("== involutive BE enumeration ==\n");
    for (int order = 3; order <= max_order; ++order) {
        base.order = order;
        if (order <= 4) run_naive("naive reference", order, base);

        base.threads = 1;
        base.lex_leader = false;
        double serial = run_timed("dfs serial", order, base);

        base.lex_leader = true;
        run_timed("dfs serial + lex prune", order, base);

        base.threads = threads;
        double par = run_timed("dfs parallel + lex prune", order, base);
        if (par > 0)
            std::printf("  parallel speedup vs serial: %.2fx\n", serial / par);
    }

    std::printf("\n== QW, not Wajsberg ==\n");
    SearchConfig qw;
    qw.satisfy = {Constraint{ClassId::QW}};
    qw.refute = {Constraint{ClassId::Wajsberg}};
    for (int order = 4; order <= max_order; ++order) {
        qw.order = order;
        qw.threads = 1;
        qw.lex_leader = false;
        double serial = run_timed("dfs serial", order, qw);
        qw.threads = threads;
        qw.lex_leader = true;
        double par = run_timed("dfs parallel + lex prune", order, qw);
        if (par > 0)
            std::printf("  parallel speedup vs serial: %.2fx\n", serial / par);
    }
    return 0;
}
