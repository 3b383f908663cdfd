#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sysatlas/pants_graph.hpp"

// Matrix model of the surface group and the brute-force closed-geodesic
// oracle.  A surface is glued from cyclic right-angled pieces (a pair of
// pants is the 3-slot case, the rotationally symmetric n-holed spheres the
// general one) along cuffs carrying (length, twist).
//
// Frames and moves.  A frame is an element of PSL(2,R) carrying the
// standard frame (point i, direction up the imaginary axis).  Every move
// between canonical frames is a fixed matrix:
//   wind      T(+-l)              stay on the cuff, one full loop
//   traverse  T(half) R(pi/2) T(seam) R(pi/2)   slot i -> slot i+1
//   cross     T(twist + off) R(pi)              jump to the matched slot
// with off = l/2 on self-loop edges (so twist 0 reproduces the seam-ends
// -glued handles) and off = 0 otherwise.  Twist 0 on an ordinary edge
// aligns the seam feet of the two sides.

namespace sysatlas {

struct HolonomyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConstructionError : HolonomyError {
    using HolonomyError::HolonomyError;
};
struct NonHyperbolicError : HolonomyError {
    using HolonomyError::HolonomyError;
};
struct EnumBudgetError : HolonomyError {
    using HolonomyError::HolonomyError;
};

// 2x2 real matrix with determinant renormalized to 1 after every product.
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    double max_abs() const;
    Mat2 inverse() const { return {d, -b, -c, a}; }
    Mat2 operator*(const Mat2& o) const;
    void renormalize();
    // flip sign so the first entry above 1e-9 is positive (PSL representative)
    Mat2 projective() const;
};

Mat2 hyp_translation(double d);  // translation by d along the imaginary axis
Mat2 hyp_rotation(double theta); // rotation by theta about i

// hyperbolic distance d(i, M i)
double base_displacement(const Mat2& m);
// 2 arccosh(|tr|/2); throws NonHyperbolicError when |tr| <= 2
double translation_length(const Mat2& m);
bool is_hyperbolic(const Mat2& m);
// equality in PSL(2,R) up to tolerance
bool projectively_close(const Mat2& m, const Mat2& n, double tol);

// Fenchel-Nielsen surface: cyclic right-angled pieces glued along cuffs.
class FNSurface {
public:
    struct Edge {
        int piece_a = 0, slot_a = 1;
        int piece_b = 0, slot_b = 1;
        double length = 0.0;
        double twist = 0.0;
        bool self_loop() const { return piece_a == piece_b; }
    };

    // pants decomposition (all pieces 3-slot)
    static FNSurface from_gluing_graph(const GluingGraph& g);
    // two rotationally symmetric (g+1)-holed spheres glued cuff-to-cuff,
    // every edge carrying (c, t)
    static FNSurface rotation_family(int genus, double c, double t);
    // cyclic chain of genus-1 four-holed spheres, cuff length `cuff`,
    // slots {3,4} of each piece glued to slots {1,2} of the next
    static FNSurface chain_surface(int genus, double cuff);
    // general constructor; slot counts per piece plus matched edges
    FNSurface(std::vector<int> piece_slots, std::vector<Edge> edges);

    int piece_count() const { return static_cast<int>(slots_.size()); }
    int slots(int piece) const { return slots_[piece]; }
    const std::vector<Edge>& edges() const { return edges_; }
    int genus() const;

    double cuff_length(int piece, int slot) const;
    double half_cuff(int piece, int slot) const;
    // seam between slot i and slot i%n+1 of a piece
    double seam(int piece, int slot) const;
    double cross_offset(int edge) const;

    // copy with one edge twisted by an extra dt (marking deformation)
    FNSurface with_extra_twist(int edge, double dt) const;

private:
    std::vector<int> slots_;
    std::vector<Edge> edges_;
    std::vector<std::vector<double>> half_;
    std::vector<std::vector<double>> seam_;

    void derive_geometry();
};

struct GeodesicRecord {
    std::string word; // canonical representative, cyclically reduced
    double length = 0.0;
};

struct EnumOptions {
    std::size_t max_nodes = 20'000'000; // total search budget over all runs
    bool parallel = true;
};

// Holonomy representation with named moves; provides word evaluation and
// the complete enumeration of closed geodesics up to a cutoff.
class HolonomyRep {
public:
    explicit HolonomyRep(FNSurface s);

    const FNSurface& surface() const { return surf_; }

    // word token per edge winding the cuff once, e.g. "w0.2"
    std::string cuff_word(int edge) const;
    // holonomy of a space-separated move word; must describe a closed loop
    Mat2 word_matrix(const std::string& word) const;
    double geodesic_length(const std::string& word) const;
    // product of the based boundary loops of each piece; all must be +-Id
    std::vector<Mat2> piece_relators() const;

    std::vector<GeodesicRecord> enumerate_geodesics(double cutoff,
                                                    const EnumOptions& opts = {}) const;

    struct Systole {
        double value = 0.0;
        int minimizers = 0;
    };
    Systole systole_bruteforce(double cutoff, const EnumOptions& opts = {}) const;

    int state_count() const { return static_cast<int>(state_piece_.size()); }

private:
    struct Move {
        int target = 0;
        Mat2 m;
        int inverse_index = 0; // index of the inverse move in its own state list
        std::string token;
    };

    FNSurface surf_;
    std::vector<int> state_piece_, state_slot_, state_edge_;
    std::vector<int> piece_base_;               // first state index of a piece
    std::vector<std::vector<Move>> moves_;      // per state
    std::vector<int> edge_primary_, edge_other_; // states of the two edge sides

    friend struct EnumImpl;

    int state_of(int piece, int slot) const;
    Mat2 cross_matrix(int edge) const;
    Mat2 traverse_matrix(int piece, int slot) const;
    void build_tables();
};

} // namespace sysatlas
