#pragma once

#include <string>

#include "klac/lefschetz.hpp"

namespace klac {

struct ProductModel {
    AlgebroidPresentation first;
    AlgebroidPresentation second;
    AlgebroidPresentation assembled;
};

// Block-diagonal product: structure constants, anchor, metric and J are block
// assembled, omega is the sum of the pullbacks, eta multiplies.
ProductModel product(const AlgebroidPresentation& p1, const AlgebroidPresentation& p2);

// Stored graded cohomology ring with a distinguished degree-2 class.
// mult[i][j] maps the pair basis of degree i x degree j to degree i+j
// coefficients; column index of (a,b) is a*dims[j]+b.
struct FiniteKahlerRing {
    std::vector<int> dims;  // h^0 .. h^{2n}
    std::vector<std::vector<Matrix>> mult;
    Matrix kahler_class;  // dims[2] x 1
    int top_degree() const { return int(dims.size()) - 1; }
    int half() const { return top_degree() / 2; }
};

// Graded commutativity, unit in degree 0, degree bounds. ModelError otherwise.
void require_valid_ring(const FiniteKahlerRing& ring);

// Multiplication by the distinguished class^k as h^{n-k} -> h^{n+k}.
Verdict ring_hard_lefschetz(const FiniteKahlerRing& ring);

// Cohomology ring of a presentation: cup product via wedge of chosen
// representatives; the distinguished class is [omega] when present.
FiniteKahlerRing cohomology_ring(const AlgebroidPresentation& p);

// Graded tensor product with Koszul signs; the distinguished class is
// x (x) 1 + 1 (x) y.
FiniteKahlerRing tensor_ring(const FiniteKahlerRing& a, const FiniteKahlerRing& b);

struct KunnethResult {
    std::vector<int> dims;  // convolution of the factor dimension vectors
    Verdict tensor_hard_lefschetz;
};

// ModelError if the ring input fails its own Hard Lefschetz invariant.
KunnethResult kunneth_dims(const AlgebroidPresentation& p, const FiniteKahlerRing& ring);

struct BManifoldSpec {
    std::vector<int> betti_m;
    std::vector<int> betti_z;
};

// bH^k = H^k(M) + H^{k-1}(Z), as dimension counts.
std::vector<int> mazzeo_melrose(const BManifoldSpec& spec);

struct ObstructionReport {
    struct Entry {
        int k = 0;
        int dim_low = 0;   // bH^{m-k}
        int dim_high = 0;  // bH^{m+k}
        bool impossible = false;
        bool not_even_surjective = false;  // dim_low < dim_high
    };
    std::vector<Entry> entries;
    std::vector<int> b_dims;
    bool impossible = false;
    std::string reason;
};

ObstructionReport b_hard_lefschetz_obstruction(const BManifoldSpec& spec, int m);

// Compiled-in presets.
enum class PresetKind { algebroid, bmanifold, ring };

struct PresetInfo {
    std::string name;
    PresetKind kind;
    std::string description;
};

const std::vector<PresetInfo>& preset_table();
bool is_preset(const std::string& name);

// "abelian-2m" takes the half-rank parameter m; others ignore it.
AlgebroidPresentation make_algebroid_preset(const std::string& name, int m = 1);
BManifoldSpec make_bmanifold_preset(const std::string& name);
FiniteKahlerRing make_ring_preset(const std::string& name);

}  // namespace klac
