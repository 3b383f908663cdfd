#include "sysatlas/holonomy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sysatlas/hyp_trig.hpp"

namespace sysatlas {

// ---------------------------------------------------------------- Mat2

double Mat2::max_abs() const {
    return std::max(std::max(std::fabs(a), std::fabs(b)),
                    std::max(std::fabs(c), std::fabs(d)));
}

void Mat2::renormalize() {
    double s = std::sqrt(std::fabs(det()));
    a /= s;
    b /= s;
    c /= s;
    d /= s;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 r{a * o.a + b * o.c, a * o.b + b * o.d,
           c * o.a + d * o.c, c * o.b + d * o.d};
    r.renormalize();
    return r;
}

Mat2 Mat2::projective() const {
    for (double v : {a, b, c, d}) {
        if (std::fabs(v) > 1e-9)
            return v > 0 ? *this : Mat2{-a, -b, -c, -d};
    }
    return *this;
}

Mat2 hyp_translation(double d) {
    double e = std::exp(d / 2);
    return {e, 0.0, 0.0, 1.0 / e};
}

Mat2 hyp_rotation(double theta) {
    double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {c, s, -s, c};
}

double base_displacement(const Mat2& m) {
    double s = (m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d) / 2;
    return std::acosh(std::max(1.0, s));
}

bool is_hyperbolic(const Mat2& m) {
    return std::fabs(m.trace()) > 2.0 + 1e-12;
}

double translation_length(const Mat2& m) {
    double t = std::fabs(m.trace());
    if (t <= 2.0 + 1e-12)
        throw NonHyperbolicError("element is not hyperbolic (|trace| <= 2)");
    return 2.0 * std::acosh(t / 2);
}

bool projectively_close(const Mat2& m, const Mat2& n, double tol) {
    Mat2 p = m.projective(), q = n.projective();
    double scale = 1.0 + std::max(p.max_abs(), q.max_abs());
    double dev = std::max(std::max(std::fabs(p.a - q.a), std::fabs(p.b - q.b)),
                          std::max(std::fabs(p.c - q.c), std::fabs(p.d - q.d)));
    return dev <= tol * scale;
}

// ----------------------------------------------------------- FNSurface

FNSurface::FNSurface(std::vector<int> piece_slots, std::vector<Edge> edges)
    : slots_(std::move(piece_slots)), edges_(std::move(edges)) {
    derive_geometry();
}

void FNSurface::derive_geometry() {
    int np = piece_count();
    std::vector<std::vector<double>> cuff(np);
    for (int p = 0; p < np; ++p) {
        if (slots_[p] < 3) throw ConstructionError("piece needs at least 3 cuffs");
        cuff[p].assign(slots_[p] + 1, 0.0);
    }
    for (const Edge& e : edges_) {
        for (auto [p, s] : {std::pair{e.piece_a, e.slot_a}, std::pair{e.piece_b, e.slot_b}}) {
            if (p < 0 || p >= np || s < 1 || s > slots_[p])
                throw ConstructionError("edge endpoint out of range");
            if (cuff[p][s] != 0.0) throw ConstructionError("cuff slot matched twice");
            cuff[p][s] = e.length;
        }
        if (!(e.length > 0) || !std::isfinite(e.length) || !std::isfinite(e.twist))
            throw ConstructionError("invalid cuff length or twist");
    }
    half_.resize(np);
    seam_.resize(np);
    for (int p = 0; p < np; ++p) {
        int n = slots_[p];
        half_[p].assign(n + 1, 0.0);
        seam_[p].assign(n + 1, 0.0);
        for (int s = 1; s <= n; ++s) {
            if (cuff[p][s] == 0.0) throw ConstructionError("unmatched cuff slot");
            half_[p][s] = cuff[p][s] / 2;
        }
        if (n == 3) {
            seam_[p][1] = hexagon_seam(half_[p][1], half_[p][2], half_[p][3]);
            seam_[p][2] = hexagon_seam(half_[p][2], half_[p][3], half_[p][1]);
            seam_[p][3] = hexagon_seam(half_[p][3], half_[p][1], half_[p][2]);
        } else {
            double c = cuff[p][1];
            for (int s = 2; s <= n; ++s)
                if (std::fabs(cuff[p][s] - c) > 1e-9 * (1 + c))
                    throw ConstructionError("symmetric n-holed piece needs equal cuffs");
            double sm = 2 * seam_half(c, n);
            for (int s = 1; s <= n; ++s) seam_[p][s] = sm;
        }
        // front polygon must close: alternating (half, seam) right-angled walk
        Mat2 w;
        Mat2 rq = hyp_rotation(M_PI / 2);
        for (int s = 1; s <= n; ++s)
            w = w * hyp_translation(half_[p][s]) * rq * hyp_translation(seam_[p][s]) * rq;
        if (!projectively_close(w, Mat2{}, 1e-7))
            throw ConstructionError("piece polygon fails to close");
    }
}

double FNSurface::cuff_length(int piece, int slot) const { return 2 * half_[piece][slot]; }
double FNSurface::half_cuff(int piece, int slot) const { return half_[piece][slot]; }
double FNSurface::seam(int piece, int slot) const { return seam_[piece][slot]; }

double FNSurface::cross_offset(int edge) const {
    const Edge& e = edges_[edge];
    return e.self_loop() ? e.length / 2 : 0.0;
}

int FNSurface::genus() const {
    // chi = sum over pieces of (2 - n_p) with every cuff glued in pairs
    int chi = 0;
    for (int n : slots_) chi += 2 - n;
    return 1 - chi / 2;
}

FNSurface FNSurface::with_extra_twist(int edge, double dt) const {
    std::vector<Edge> es = edges_;
    es[edge].twist += dt;
    return FNSurface(slots_, es);
}

FNSurface FNSurface::from_gluing_graph(const GluingGraph& g) {
    g.validate();
    std::vector<Edge> es;
    es.reserve(g.edges.size());
    for (const auto& ge : g.edges)
        es.push_back({ge.pants_a, ge.slot_a, ge.pants_b, ge.slot_b, ge.length, ge.twist});
    return FNSurface(std::vector<int>(g.pants_count, 3), std::move(es));
}

FNSurface FNSurface::rotation_family(int genus, double c, double t) {
    if (genus < 2) throw ConstructionError("rotation family needs genus >= 2");
    int n = genus + 1;
    std::vector<Edge> es;
    for (int k = 1; k <= n; ++k) es.push_back({0, k, 1, k, c, t});
    return FNSurface({n, n}, std::move(es));
}

FNSurface FNSurface::chain_surface(int genus, double cuff) {
    if (genus < 2) throw ConstructionError("chain surface needs genus >= 2");
    int m = genus - 1;
    std::vector<Edge> es;
    for (int k = 0; k < m; ++k) {
        int nxt = (k + 1) % m;
        es.push_back({k, 3, nxt, 1, cuff, 0.0});
        es.push_back({k, 4, nxt, 2, cuff, 0.0});
    }
    return FNSurface(std::vector<int>(m, 4), std::move(es));
}

// ---------------------------------------------------------- HolonomyRep

int HolonomyRep::state_of(int piece, int slot) const {
    return piece_base_[piece] + slot - 1;
}

Mat2 HolonomyRep::cross_matrix(int edge) const {
    const auto& e = surf_.edges()[edge];
    return hyp_translation(e.twist + surf_.cross_offset(edge)) * hyp_rotation(M_PI);
}

Mat2 HolonomyRep::traverse_matrix(int piece, int slot) const {
    Mat2 rq = hyp_rotation(M_PI / 2);
    return hyp_translation(surf_.half_cuff(piece, slot)) * rq *
           hyp_translation(surf_.seam(piece, slot)) * rq;
}

HolonomyRep::HolonomyRep(FNSurface s) : surf_(std::move(s)) { build_tables(); }

void HolonomyRep::build_tables() {
    int np = surf_.piece_count();
    piece_base_.resize(np);
    int ns = 0;
    for (int p = 0; p < np; ++p) {
        piece_base_[p] = ns;
        ns += surf_.slots(p);
    }
    state_piece_.resize(ns);
    state_slot_.resize(ns);
    state_edge_.assign(ns, -1);
    for (int p = 0; p < np; ++p)
        for (int s = 1; s <= surf_.slots(p); ++s) {
            state_piece_[state_of(p, s)] = p;
            state_slot_[state_of(p, s)] = s;
        }
    edge_primary_.resize(surf_.edges().size());
    edge_other_.resize(surf_.edges().size());
    for (size_t e = 0; e < surf_.edges().size(); ++e) {
        const auto& ed = surf_.edges()[e];
        edge_primary_[e] = state_of(ed.piece_a, ed.slot_a);
        edge_other_[e] = state_of(ed.piece_b, ed.slot_b);
        state_edge_[edge_primary_[e]] = static_cast<int>(e);
        state_edge_[edge_other_[e]] = static_cast<int>(e);
    }

    auto token = [](char kind, int p, int s, bool inv) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%c%d.%d%s", kind, p, s, inv ? "'" : "");
        return std::string(buf);
    };

    moves_.assign(ns, {});
    for (int st = 0; st < ns; ++st) {
        int p = state_piece_[st], i = state_slot_[st], n = surf_.slots(p);
        double len = surf_.cuff_length(p, i);
        int j = i % n + 1;           // next slot
        int k = (i + n - 2) % n + 1; // previous slot
        // 0: wind+, 1: wind-, 2: traverse forward, 3: traverse backward, 4: cross
        moves_[st].push_back({st, hyp_translation(len), 1, token('w', p, i, false)});
        moves_[st].push_back({st, hyp_translation(-len), 0, token('w', p, i, true)});
        moves_[st].push_back({state_of(p, j), traverse_matrix(p, i), 3, token('t', p, i, false)});
        moves_[st].push_back(
            {state_of(p, k), traverse_matrix(p, k).inverse(), 2, token('t', p, k, true)});
        int e = state_edge_[st];
        int other = (edge_primary_[e] == st) ? edge_other_[e] : edge_primary_[e];
        char buf[32];
        std::snprintf(buf, sizeof buf, "x%d", e);
        moves_[st].push_back({other, cross_matrix(e), 4, buf});
    }
}

std::string HolonomyRep::cuff_word(int edge) const {
    int st = edge_primary_[edge];
    return moves_[st][0].token;
}

namespace {
std::vector<std::string> split_tokens(const std::string& word) {
    std::vector<std::string> out;
    std::istringstream in(word);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}
} // namespace

Mat2 HolonomyRep::word_matrix(const std::string& word) const {
    auto toks = split_tokens(word);
    if (toks.empty()) throw HolonomyError("empty word");
    // candidate start states: states owning the first token
    std::vector<int> starts;
    for (int st = 0; st < state_count(); ++st)
        for (const Move& mv : moves_[st])
            if (mv.token == toks[0]) starts.push_back(st);
    if (starts.empty()) throw HolonomyError("unknown move token: " + toks[0]);
    for (int st0 : starts) {
        int st = st0;
        Mat2 m;
        bool ok = true;
        for (const auto& t : toks) {
            const Move* found = nullptr;
            for (const Move& mv : moves_[st])
                if (mv.token == t) {
                    found = &mv;
                    break;
                }
            if (!found) {
                ok = false;
                break;
            }
            m = m * found->m;
            st = found->target;
        }
        if (ok && st == st0) return m;
    }
    throw HolonomyError("word does not describe a closed loop: " + word);
}

double HolonomyRep::geodesic_length(const std::string& word) const {
    Mat2 m = word_matrix(word);
    if (projectively_close(m, Mat2{}, 1e-9))
        throw NonHyperbolicError("word is trivial in the surface group");
    return translation_length(m);
}

std::vector<Mat2> HolonomyRep::piece_relators() const {
    std::vector<Mat2> out;
    for (int p = 0; p < surf_.piece_count(); ++p) {
        int n = surf_.slots(p);
        // boundary loops based through the front polygon compose to the
        // identity in descending slot order
        Mat2 rel, conn;
        for (int s = 1; s <= n; ++s) {
            Mat2 loop = conn * hyp_translation(surf_.cuff_length(p, s)) * conn.inverse();
            rel = loop * rel;
            conn = conn * traverse_matrix(p, s);
        }
        out.push_back(rel);
    }
    return out;
}

// ---------------------------------------------------------- enumeration

namespace {

struct Node {
    Mat2 m;
    int state = 0;
    int parent = -1;
    int move = -1;
    double disp = 0.0;
};

// visited set bucketed by (state, quantized displacement); candidates in
// adjacent displacement buckets are compared projectively
class VisitSet {
public:
    bool insert_if_new(const std::vector<Node>& nodes, const Node& nd) {
        long long q = static_cast<long long>(std::llround(nd.disp * 1e5));
        for (long long dq = -1; dq <= 1; ++dq) {
            auto it = buckets_.find(key(nd.state, q + dq));
            if (it == buckets_.end()) continue;
            for (int idx : it->second)
                if (projectively_close(nodes[idx].m, nd.m, 1e-7)) return false;
        }
        buckets_[key(nd.state, q)].push_back(static_cast<int>(nodes.size()));
        return true;
    }

private:
    static long long key(int state, long long q) {
        return q * (1 << 20) + state;
    }
    std::unordered_map<long long, std::vector<int>> buckets_;
};

struct Run {
    int start_state = 0;
    std::vector<Node> nodes;
    std::vector<std::vector<int>> by_state;
};

struct Candidate {
    double length = 0.0;
    int run_edge = 0;
    Mat2 m;
    std::string word;
};

} // namespace

struct EnumImpl {
    const HolonomyRep& rep;
    double cutoff;
    EnumOptions opts;
    std::atomic<long long> nodes_left;

    EnumImpl(const HolonomyRep& r, double co, const EnumOptions& o)
        : rep(r), cutoff(co), opts(o),
          nodes_left(static_cast<long long>(o.max_nodes)) {}

    Run bfs(int start_state, double radius) {
        Run run;
        run.start_state = start_state;
        run.by_state.resize(rep.state_count());
        VisitSet seen;
        Node root;
        root.state = start_state;
        seen.insert_if_new(run.nodes, root); // registers the upcoming index 0
        run.nodes.push_back(root);
        run.by_state[start_state].push_back(0);
        for (size_t qi = 0; qi < run.nodes.size(); ++qi) {
            Node cur = run.nodes[qi];
            const auto& mvs = rep.moves_[cur.state];
            for (size_t mi = 0; mi < mvs.size(); ++mi) {
                // skip the exact inverse of the arriving move
                if (cur.parent >= 0) {
                    const auto& pm = rep.moves_[run.nodes[cur.parent].state][cur.move];
                    if (static_cast<int>(mi) == pm.inverse_index)
                        continue;
                }
                Node nxt;
                nxt.m = cur.m * mvs[mi].m;
                nxt.state = mvs[mi].target;
                nxt.parent = static_cast<int>(qi);
                nxt.move = static_cast<int>(mi);
                nxt.disp = base_displacement(nxt.m);
                if (nxt.disp > radius) continue;
                if (nodes_left.fetch_sub(1) <= 0)
                    throw EnumBudgetError("geodesic enumeration exceeded node budget");
                if (seen.insert_if_new(run.nodes, nxt)) {
                    run.by_state[nxt.state].push_back(static_cast<int>(run.nodes.size()));
                    run.nodes.push_back(nxt);
                }
            }
        }
        return run;
    }

    std::string word_of(const Run& run, int node) const {
        std::vector<std::string> toks;
        for (int i = node; i > 0; i = run.nodes[i].parent)
            toks.push_back(rep.moves_[run.nodes[run.nodes[i].parent].state][run.nodes[i].move].token);
        std::reverse(toks.begin(), toks.end());
        std::string w;
        for (size_t i = 0; i < toks.size(); ++i) {
            if (i) w += ' ';
            w += toks[i];
        }
        return w;
    }

    std::vector<Run> all_runs(double radius) {
        const auto& edges = rep.surface().edges();
        std::vector<Run> runs(edges.size());
        std::exception_ptr err;
        if (opts.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (std::ptrdiff_t e = 0; e < static_cast<std::ptrdiff_t>(edges.size()); ++e) {
                try {
                    runs[e] = bfs(rep.edge_primary_[e], radius);
                } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
                    if (!err) err = std::current_exception();
                }
            }
        } else {
            for (size_t e = 0; e < edges.size(); ++e)
                runs[e] = bfs(rep.edge_primary_[e], radius);
        }
        if (err) std::rethrow_exception(err);
        return runs;
    }

    std::vector<Candidate> collect(const std::vector<Run>& runs) {
        std::vector<Candidate> cands;
        const auto& edges = rep.surface().edges();
        for (size_t e = 0; e < edges.size(); ++e) {
            double le = edges[e].length;
            if (le <= cutoff + 1e-9) {
                Candidate c;
                c.length = le;
                c.run_edge = static_cast<int>(e);
                c.m = hyp_translation(le);
                c.word = rep.cuff_word(static_cast<int>(e));
                cands.push_back(std::move(c));
            }
            Mat2 x = rep.cross_matrix(static_cast<int>(e));
            const Run& run = runs[e];
            for (int idx : run.by_state[rep.edge_other_[e]]) {
                Mat2 m = run.nodes[idx].m * x;
                if (projectively_close(m, Mat2{}, 1e-9)) continue;
                if (!is_hyperbolic(m)) continue;
                double len = translation_length(m);
                if (len > cutoff + 1e-9) continue;
                if (base_displacement(m) > len + le + 0.5) continue;
                Candidate c;
                c.length = len;
                c.run_edge = static_cast<int>(e);
                c.m = m;
                c.word = word_of(run, idx);
                c.word += c.word.empty() ? "" : " ";
                char buf[16];
                std::snprintf(buf, sizeof buf, "x%zu", e);
                c.word += buf;
                cands.push_back(std::move(c));
            }
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            if (a.length != b.length) return a.length < b.length;
            if (a.run_edge != b.run_edge) return a.run_edge < b.run_edge;
            return a.word < b.word;
        });
        return cands;
    }

    bool same_class(const std::vector<Run>& runs, const Candidate& rep_c,
                    const Candidate& c) const {
        double tol = 1e-7 * (1 + rep_c.length);
        if (std::fabs(rep_c.length - c.length) > tol) return false;
        const Run& run = runs[rep_c.run_edge];
        int target_state = rep.edge_primary_[c.run_edge];
        Mat2 inv = rep_c.m.inverse();
        for (int idx : run.by_state[target_state]) {
            const Mat2& t = run.nodes[idx].m;
            Mat2 conj = t * c.m * t.inverse();
            if (projectively_close(conj, rep_c.m, 1e-6) ||
                projectively_close(conj, inv, 1e-6))
                return true;
        }
        return false;
    }
};

namespace {

std::string token_inverse(const std::string& t) {
    if (t[0] == 'x') return t;
    if (t.back() == '\'') return t.substr(0, t.size() - 1);
    return t + "'";
}

// cyclic reduction + lexicographically minimal rotation over the word and
// its inverse
std::string canonical_cyclic(const std::string& word) {
    std::vector<std::string> toks = split_tokens(word);
    bool changed = true;
    while (changed && toks.size() > 1) {
        changed = false;
        for (size_t i = 0; i + 1 < toks.size(); ++i)
            if (toks[i + 1] == token_inverse(toks[i])) {
                toks.erase(toks.begin() + i, toks.begin() + i + 2);
                changed = true;
                break;
            }
        if (!changed && toks.size() > 1 && toks.front() == token_inverse(toks.back())) {
            toks.erase(toks.begin());
            toks.pop_back();
            changed = true;
        }
    }
    if (toks.empty()) return "";
    std::vector<std::string> inv(toks.rbegin(), toks.rend());
    for (auto& t : inv) t = token_inverse(t);
    auto render = [](const std::vector<std::string>& v, size_t rot) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ' ';
            s += v[(rot + i) % v.size()];
        }
        return s;
    };
    std::string best;
    for (size_t r = 0; r < toks.size(); ++r) {
        for (const auto* v : {&toks, &inv}) {
            std::string s = render(*v, r);
            if (best.empty() || s < best) best = std::move(s);
        }
    }
    return best;
}

} // namespace

std::vector<GeodesicRecord> HolonomyRep::enumerate_geodesics(double cutoff,
                                                             const EnumOptions& opts) const {
    if (cutoff <= 0.0) return {};
    double lmax = 0.0;
    for (const auto& e : surf_.edges()) lmax = std::max(lmax, e.length);

    EnumImpl impl(*this, cutoff, opts);
    double r1 = cutoff + lmax + 1.0;
    std::vector<Run> runs = impl.all_runs(r1);
    std::vector<Candidate> cands = impl.collect(runs);
    if (cands.empty()) return {};

    // widen until the conjugator ball provably covers every candidate pair:
    // a kept representative of length l sits within
    //   r(l) = arccosh(sinh((l + lmax + 0.5)/2) / sinh(l/2))
    // of its axis, so conjugators need radius 2 max r + cutoff/2.
    double lmin = cands.front().length;
    double arg = std::sinh((cutoff + lmax + 0.5) / 2) / std::sinh(lmin / 2);
    double rmax = std::acosh(std::max(1.0, arg));
    double rneed = 2 * rmax + cutoff / 2 + 0.6;
    if (rneed > r1) {
        runs = impl.all_runs(rneed);
        cands = impl.collect(runs);
    }

    std::vector<Candidate> reps;
    std::vector<int> counts;
    for (const Candidate& c : cands) {
        bool placed = false;
        for (size_t k = 0; k < reps.size(); ++k)
            if (impl.same_class(runs, reps[k], c)) {
                ++counts[k];
                placed = true;
                break;
            }
        if (!placed) {
            reps.push_back(c);
            counts.push_back(1);
        }
    }

    std::vector<GeodesicRecord> out;
    out.reserve(reps.size());
    for (const Candidate& c : reps)
        out.push_back({canonical_cyclic(c.word), c.length});
    std::sort(out.begin(), out.end(), [](const GeodesicRecord& a, const GeodesicRecord& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });
    return out;
}

HolonomyRep::Systole HolonomyRep::systole_bruteforce(double cutoff,
                                                     const EnumOptions& opts) const {
    auto recs = enumerate_geodesics(cutoff, opts);
    if (recs.empty())
        throw HolonomyError("no closed geodesic found under the cutoff");
    Systole s;
    s.value = recs.front().length;
    for (const auto& r : recs)
        if (r.length <= s.value + 1e-9 * (1 + s.value)) ++s.minimizers;
    return s;
}

} // namespace sysatlas
