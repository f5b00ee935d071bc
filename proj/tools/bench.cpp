// Benchmark: OpenMP kernels against their serial reference implementations.
#include <chrono>
#include <cstdio>

#include "quatpoly/named.hpp"
#include "quatpoly/parallel.hpp"
#include "quatpoly/polytope.hpp"

using namespace qp;

namespace {

template <class F>
double time_s(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_facets(const char* label, const PointSet& pts, int threads) {
    FacetList serial, parallel;
    double ts = time_s([&] { serial = facets_serial(pts); });
    double tp = time_s([&] { parallel = facets(pts, {threads}); });
    std::printf("%-22s %3d facets   serial %7.3f s   omp(%d) %7.3f s   speedup %.2fx   identical %s\n",
                label, serial.size(), ts, threads, tp, ts / tp,
                serial.facets == parallel.facets ? "yes" : "NO");
}

void bench_edges(const char* label, const PointSet& pts, int threads) {
    EdgeGraph serial, parallel;
    double ts = time_s([&] { serial = edge_graph_serial(pts); });
    double tp = time_s([&] { parallel = edge_graph(pts, threads); });
    std::printf("%-22s %4zu edges   serial %7.3f s   omp(%d) %7.3f s   speedup %.2fx   identical %s\n",
                label, serial.edges.size(), ts, threads, tp, ts / tp,
                serial.edges == parallel.edges ? "yes" : "NO");
}

void bench_census(const char* label, const PointSet& pts, const Group& g, int threads) {
    FacetList cells = facets(pts, {threads});
    std::vector<CellRecord> one, many;
    double ts = time_s([&] { one = cell_census(pts, cells, g, 1); });
    double tp = time_s([&] { many = cell_census(pts, cells, g, threads); });
    bool same = one.size() == many.size();
    for (size_t i = 0; same && i < one.size(); ++i)
        same = one[i].vertex_indices == many[i].vertex_indices &&
               one[i].shape == many[i].shape && one[i].stabilizer_order == many[i].stabilizer_order;
    std::printf("%-22s %3zu cells    serial %7.3f s   omp(%d) %7.3f s   speedup %.2fx   identical %s\n",
                label, one.size(), ts, threads, tp, ts / tp, same ? "yes" : "NO");
}

}  // namespace

int main() {
    const int threads = worker_count();
    std::printf("workers: %d (QUATPOLY_THREADS to override)\n\n", threads);

    PointSet s = named::quaternion_set("S");
    PointSet u = PointSet::set_union(named::quaternion_set("S"), named::quaternion_set("Stilde"));

    bench_edges("edges snub24 (96)", s, threads);
    bench_edges("edges f4-union (192)", u, threads);
    bench_facets("facets snub24 (96)", s, threads);
    bench_facets("facets f4-union (192)", u, threads);
    bench_census("census snub24", s, named::group("snub_group"), threads);
    bench_census("census f4-union", u, named::group("W_F4"), threads);
    return 0;
}
