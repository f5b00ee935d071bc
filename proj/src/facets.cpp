#include "quatpoly/facets.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "quatpoly/parallel.hpp"

namespace qp {

namespace {

FieldScalar det3(const FieldScalar& a, const FieldScalar& b, const FieldScalar& c,
                 const FieldScalar& d, const FieldScalar& e, const FieldScalar& f,
                 const FieldScalar& g, const FieldScalar& h, const FieldScalar& i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Vector orthogonal to u, v, w (cofactor expansion); zero iff dependent.
Vec4 wedge(const Vec4& u, const Vec4& v, const Vec4& w) {
    Vec4 n;
    n[0] = det3(u[1], u[2], u[3], v[1], v[2], v[3], w[1], w[2], w[3]);
    n[1] = -det3(u[0], u[2], u[3], v[0], v[2], v[3], w[0], w[2], w[3]);
    n[2] = det3(u[0], u[1], u[3], v[0], v[1], v[3], w[0], w[1], w[3]);
    n[3] = -det3(u[0], u[1], u[2], v[0], v[1], v[2], w[0], w[1], w[2]);
    return n;
}

int side(const Vec4& n, const Quaternion& x, const Quaternion& base) {
    return quat_dot(n, x - base).sign();
}

// Greedy affine basis: indices whose offsets from pts[sub[0]] are independent.
// Uses exact Gaussian elimination on a growing row set.
std::vector<int> affine_basis(const PointSet& pts, const std::vector<int>& sub) {
    std::vector<int> basis = {sub[0]};
    std::vector<Vec4> rows;  // row-reduced offsets
    for (size_t k = 1; k < sub.size() && rows.size() < 4; ++k) {
        Vec4 v = pts[sub[k]] - pts[sub[0]];
        for (const auto& r : rows) {
            int lead = 0;
            while (r[lead].is_zero()) ++lead;
            if (!v[lead].is_zero()) v = v * r[lead] - r * v[lead];
        }
        if (!v.is_zero()) {
            rows.push_back(v);
            basis.push_back(sub[k]);
        }
    }
    return basis;
}

std::vector<int> all_indices(const PointSet& pts) {
    std::vector<int> idx(pts.size());
    for (int i = 0; i < pts.size(); ++i) idx[i] = i;
    return idx;
}

// All points on the hyperplane {x : n.(x - base) = 0}; checks the rest lie
// strictly on one side and returns them sorted. Throws if not supporting.
std::vector<int> contact_set(const PointSet& pts, const Vec4& n, const Quaternion& base) {
    std::vector<int> on;
    int inner = 0;
    for (int i = 0; i < pts.size(); ++i) {
        int s = side(n, pts[i], base);
        if (s == 0) {
            on.push_back(i);
        } else {
            if (inner == 0) inner = s;
            if (s != inner) throw std::logic_error("facets: hyperplane not supporting");
        }
    }
    return on;
}

// Seed facet by lexicographic extreme search: start from the supporting
// hyperplane x0 = min (which contains the lex-min vertex) and rotate it
// about its contact flat, always to first touch, until contact is 3D.
std::vector<int> seed_facet(const PointSet& pts) {
    Vec4 n(-1, 0, 0, 0);
    int lo = 0;  // minimal x0 by exact value comparison
    for (int i = 1; i < pts.size(); ++i)
        if (compare_real(pts[i][0], pts[lo][0]) < 0) lo = i;
    const Quaternion base = pts[lo];
    std::vector<int> contacts = contact_set(pts, n, base);
    while (true) {
        std::vector<int> basis = affine_basis(pts, contacts);
        if (basis.size() == 4) return contacts;
        // orthogonalized basis of the contact flat (Gram-Schmidt, exact)
        std::vector<Vec4> flat;
        for (size_t k = 1; k < basis.size(); ++k) {
            Vec4 f = pts[basis[k]] - pts[basis[0]];
            for (const auto& g : flat) f = f - g * (quat_dot(f, g) / quat_dot(g, g));
            flat.push_back(f);
        }
        auto project_out = [&flat](Vec4 v) {
            for (const auto& f : flat) v = v - f * (quat_dot(v, f) / quat_dot(f, f));
            return v;
        };
        // rotation direction m from the first point off the flat
        Vec4 m;
        int first = -1;
        for (int i = 0; i < pts.size(); ++i) {
            if (std::binary_search(contacts.begin(), contacts.end(), i)) continue;
            Vec4 v = project_out(pts[i] - pts[basis[0]]);
            if (!v.is_zero()) { m = v; first = i; break; }
        }
        if (first < 0) throw std::invalid_argument("facets: points do not span 4D affinely");
        // first touch: minimize t = (-n.dy)/(m.dy) over candidates with m.dy > 0;
        // m.dfirst = |m|^2 > 0 so the pool is nonempty
        int best = first;
        FieldScalar bn = -quat_dot(n, pts[best] - pts[basis[0]]);
        FieldScalar bm = quat_dot(m, pts[best] - pts[basis[0]]);
        for (int i = 0; i < pts.size(); ++i) {
            if (i == first || std::binary_search(contacts.begin(), contacts.end(), i)) continue;
            Vec4 d = pts[i] - pts[basis[0]];
            FieldScalar mi = quat_dot(m, d);
            if (mi.sign() <= 0) continue;
            FieldScalar ni = -quat_dot(n, d);
            if ((ni * bm - bn * mi).sign() < 0) { best = i; bn = ni; bm = mi; }
        }
        n = n * bm + m * bn;
        contacts = contact_set(pts, n, pts[basis[0]]);
    }
}

struct PivotTask {
    std::array<int, 3> ridge_basis;  // affinely independent ridge points
    int inside_ref;                  // old-facet vertex off the ridge flat
    const std::vector<int>* old_facet;  // sorted; its points are excluded
};

// Rotate the supporting hyperplane across a ridge: tournament over all
// points off the old facet plane, then full contact scan.
std::vector<int> pivot(const PointSet& pts, const PivotTask& t) {
    const Quaternion& r0 = pts[t.ridge_basis[0]];
    const Vec4 u = pts[t.ridge_basis[1]] - r0, v = pts[t.ridge_basis[2]] - r0;
    const Quaternion& w = pts[t.inside_ref];
    int best = -1;
    Vec4 n_best;
    int s_in = 0;
    for (int i = 0; i < pts.size(); ++i) {
        if (std::binary_search(t.old_facet->begin(), t.old_facet->end(), i)) continue;
        if (best < 0) {
            best = i;
            n_best = wedge(u, v, pts[i] - r0);
            s_in = side(n_best, w, r0);
            continue;
        }
        int s = side(n_best, pts[i], r0);
        if (s != 0 && s == -s_in) {
            best = i;
            n_best = wedge(u, v, pts[i] - r0);
            s_in = side(n_best, w, r0);
        }
    }
    if (best < 0) throw std::invalid_argument("facets: points do not span 4D affinely");
    return contact_set(pts, n_best, r0);
}

// 2-faces of one facet: supporting planes within the facet's own
// hyperplane, found by a triple scan with subset pruning.
std::vector<std::vector<int>> cell_faces(const PointSet& pts, const std::vector<int>& facet,
                                         const Vec4& n_out) {
    const int m = static_cast<int>(facet.size());
    std::vector<std::vector<int>> faces;
    auto contained = [&faces](int a, int b, int c) {
        for (const auto& f : faces)
            if (std::binary_search(f.begin(), f.end(), a) &&
                std::binary_search(f.begin(), f.end(), b) &&
                std::binary_search(f.begin(), f.end(), c))
                return true;
        return false;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                if (contained(facet[i], facet[j], facet[k])) continue;
                const Quaternion& p0 = pts[facet[i]];
                Vec4 nn = wedge(pts[facet[j]] - p0, pts[facet[k]] - p0, n_out);
                if (nn.is_zero()) continue;  // collinear triple
                int inner = 0;
                bool ok = true;
                std::vector<int> on;
                for (int x = 0; x < m; ++x) {
                    int s = side(nn, pts[facet[x]], p0);
                    if (s == 0) {
                        on.push_back(facet[x]);
                    } else {
                        if (inner == 0) inner = s;
                        if (s != inner) { ok = false; break; }
                    }
                }
                if (ok) faces.push_back(std::move(on));  // already sorted: facet sorted, scan in order
            }
    std::sort(faces.begin(), faces.end());
    return faces;
}

Vec4 outward_normal(const PointSet& pts, const std::vector<int>& facet) {
    auto basis = affine_basis(pts, facet);
    if (basis.size() != 4) throw std::logic_error("facet_normal: degenerate facet");
    const Quaternion& b0 = pts[basis[0]];
    Vec4 n = wedge(pts[basis[1]] - b0, pts[basis[2]] - b0, pts[basis[3]] - b0);
    // orient: interior (centroid of all points) on the negative side
    Quaternion cen;
    for (const auto& p : pts) cen += p;
    cen = cen * FieldScalar(make_rational(1, pts.size()));
    int s = side(n, cen, b0);
    if (s == 0) throw std::logic_error("facet_normal: centroid on facet plane");
    return s < 0 ? n : -n;
}

// Ridge tasks of a freshly found facet keyed by ridge vertex set.
std::vector<std::pair<std::vector<int>, PivotTask>> ridge_tasks(
    const PointSet& pts, const std::vector<int>& facet, const Vec4& n_out) {
    std::vector<std::pair<std::vector<int>, PivotTask>> out;
    for (auto& ridge : cell_faces(pts, facet, n_out)) {
        auto rb = affine_basis(pts, ridge);
        // inside reference: any facet vertex off the ridge flat
        int wref = -1;
        for (int idx : facet) {
            if (std::binary_search(ridge.begin(), ridge.end(), idx)) continue;
            wref = idx;
            break;
        }
        PivotTask t{{rb[0], rb[1], rb[2]}, wref, nullptr};
        out.emplace_back(std::move(ridge), t);
    }
    return out;
}

void require_4d(const PointSet& pts) {
    if (pts.size() < 5 || affine_rank(pts) < 5)
        throw std::invalid_argument(
            "facets: points do not span 4D affinely (use hull3d for 3D data)");
}

}  // namespace

int affine_rank(const PointSet& pts) {
    if (pts.empty()) return 0;
    return static_cast<int>(affine_basis(pts, all_indices(pts)).size());
}

Vec4 facet_normal(const PointSet& pts, const std::vector<int>& facet) {
    return outward_normal(pts, facet);
}

std::vector<std::vector<int>> facet_ridges(const PointSet& pts, const std::vector<int>& facet) {
    return cell_faces(pts, facet, outward_normal(pts, facet));
}

FacetList facets_serial(const PointSet& pts) {
    require_4d(pts);
    std::set<std::vector<int>> found;
    std::map<std::vector<int>, int> ridge_seen;
    std::deque<std::vector<int>> queue;
    queue.push_back(seed_facet(pts));
    found.insert(queue.front());
    while (!queue.empty()) {
        std::vector<int> f = std::move(queue.front());
        queue.pop_front();
        Vec4 n_out = outward_normal(pts, f);
        for (auto& [rkey, task] : ridge_tasks(pts, f, n_out)) {
            if (++ridge_seen[rkey] != 1) continue;  // twin facet already known
            PivotTask t = task;
            t.old_facet = &f;
            std::vector<int> nf = pivot(pts, t);
            if (found.insert(nf).second) queue.push_back(std::move(nf));
        }
    }
    FacetList out;
    out.facets.assign(found.begin(), found.end());
    return out;
}

FacetList facets(const PointSet& pts, const FacetOptions& opt) {
    require_4d(pts);
    const int threads = opt.threads > 0 ? opt.threads : worker_count();
    std::set<std::vector<int>> found;           // set nodes give stable addresses
    std::map<std::vector<int>, int> ridge_seen;
    std::vector<const std::vector<int>*> fresh;
    fresh.push_back(&*found.insert(seed_facet(pts)).first);

    while (!fresh.empty()) {
        // ridge enumeration of the wave's facets, fanned out to workers
        std::vector<std::vector<std::pair<std::vector<int>, PivotTask>>> per_facet(fresh.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long i = 0; i < static_cast<long>(fresh.size()); ++i) {
            const auto& f = *fresh[i];
            auto rts = ridge_tasks(pts, f, outward_normal(pts, f));
            for (auto& [rkey, task] : rts) task.old_facet = fresh[i];
            per_facet[i] = std::move(rts);
        }
        // deterministic merge: tasks in facet-then-ridge order, once per ridge
        std::vector<PivotTask> tasks;
        for (auto& rts : per_facet)
            for (auto& [rkey, task] : rts)
                if (++ridge_seen[rkey] == 1) tasks.push_back(task);
        fresh.clear();
        std::vector<std::vector<int>> results(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long i = 0; i < static_cast<long>(tasks.size()); ++i)
            results[i] = pivot(pts, tasks[i]);
        for (auto& nf : results) {
            auto [it, is_new] = found.insert(std::move(nf));
            if (is_new) fresh.push_back(&*it);
        }
    }
    FacetList out;
    out.facets.assign(found.begin(), found.end());
    return out;
}

FacetList brute_facets(const PointSet& pts, bool override_guard) {
    require_4d(pts);
    const int n = pts.size();
    if (n > 30 && !override_guard)
        throw std::invalid_argument("brute_facets: more than 30 points; pass override to force");
    std::set<std::vector<int>> found;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    const Quaternion& p0 = pts[i];
                    Vec4 nn = wedge(pts[j] - p0, pts[k] - p0, pts[l] - p0);
                    if (nn.is_zero()) continue;
                    int inner = 0;
                    bool ok = true;
                    std::vector<int> on;
                    for (int x = 0; x < n; ++x) {
                        int s = side(nn, pts[x], p0);
                        if (s == 0) {
                            on.push_back(x);
                        } else {
                            if (inner == 0) inner = s;
                            if (s != inner) { ok = false; break; }
                        }
                    }
                    if (ok) found.insert(std::move(on));
                }
    FacetList out;
    out.facets.assign(found.begin(), found.end());
    return out;
}

}  // namespace qp
