// Benchmark: serial vs OpenMP-parallel geodesic enumeration on the tree
// surface, verifying that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sysatlas/holonomy.hpp"
#include "sysatlas/pants_graph.hpp"
#include "sysatlas/text_io.hpp"

using namespace sysatlas;

namespace {

double run(const HolonomyRep& rep, double cutoff, bool parallel,
           std::vector<GeodesicRecord>& out) {
    EnumOptions opts;
    opts.parallel = parallel;
    auto t0 = std::chrono::steady_clock::now();
    out = rep.enumerate_geodesics(cutoff, opts);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int genus = argc > 1 ? std::atoi(argv[1]) : 6;
    double cutoff = argc > 2 ? std::atof(argv[2]) : 2.7;
#ifdef _OPENMP
    if (const char* th = std::getenv("SYSTOLIC_ATLAS_THREADS")) {
        int n = std::atoi(th);
        if (n > 0) omp_set_num_threads(n);
    }
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both runs are serial\n");
#endif
    HolonomyRep rep(FNSurface::from_gluing_graph(surface_from_tree(build_tree_for_genus(genus))));
    std::printf("tree surface genus %d, cutoff %s\n", genus, format_g15(cutoff).c_str());

    std::vector<GeodesicRecord> serial_recs, parallel_recs;
    double ts = run(rep, cutoff, false, serial_recs);
    double tp = run(rep, cutoff, true, parallel_recs);

    bool identical = serial_recs.size() == parallel_recs.size();
    for (size_t i = 0; identical && i < serial_recs.size(); ++i)
        identical = serial_recs[i].word == parallel_recs[i].word &&
                    serial_recs[i].length == parallel_recs[i].length;

    std::printf("classes found: %zu\n", serial_recs.size());
    std::printf("serial:   %10.2f ms\n", ts);
    std::printf("parallel: %10.2f ms   speedup %.2fx\n", tp, ts / tp);
    std::printf("results identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
