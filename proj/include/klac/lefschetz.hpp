#pragma once

#include "klac/cohomology.hpp"

namespace klac {

struct HLReport {
    struct Entry {
        int k = 0;
        int dim_source = 0;  // dim H^{m-k}
        int dim_target = 0;  // dim H^{m+k}
        int map_rank = 0;
        bool iso = false;
        std::optional<FormVector> kernel_witness;  // class killed by [L]^k
    };
    int half_rank = 0;
    std::vector<Entry> entries;  // k = 0..m
    bool all_iso = false;
};

// Induced [L]^k : H^{m-k} -> H^{m+k} for every k. Symplectic model required
// (even rank, d omega = 0, omega nondegenerate); ModelError otherwise.
HLReport hard_lefschetz_check(const AlgebroidPresentation& p);

struct DdStarReport {
    struct Entry {
        int degree = 0;
        int dim_imd_cap_kerds = 0;
        int dim_imds_cap_kerd = 0;
        int dim_im_dds = 0;
        bool equal = false;
    };
    std::vector<Entry> entries;
    bool pass = false;
};

DdStarReport ddstar_lemma_check(const AlgebroidPresentation& p);

// Quasi-isomorphism of (ker d*, d) into the full complex.
QuasiIsoReport symplectic_harmonic_check(const AlgebroidPresentation& p);

struct EquivalenceReport {
    bool hard_lefschetz = false;
    bool ddstar = false;
    bool symplectic_harmonic = false;
    bool verdict = false;  // the common value
};

// Runs the three checks independently; ContractError if they disagree.
EquivalenceReport equivalence_theorem_check(const AlgebroidPresentation& p);

struct IdentityReport {
    enum class Status { holds, fails, inapplicable };
    struct Item {
        std::string name;
        Status status = Status::fails;
        std::string witness;  // residual location / gating reason
    };
    std::vector<Item> items;
    bool all_applicable_hold = false;
    const Item* find(const std::string& name) const;
};

// Exact-matrix identity suite on a Kahler model: the two Kahler commutators,
// the star_h^2 sign law, the d/del/dbar adjoint star formulas, the Laplacian
// relations, ker d^dagger vs ker d*, the heart conjugation and the pairing
// decomposition on random form pairs. Adjoint-based items are gated to
// unimodular models and reported inapplicable otherwise.
IdentityReport kahler_identity_suite(const AlgebroidPresentation& p, int random_pairs = 100,
                                     unsigned seed = 20240901);

struct PairingReport {
    struct Entry {
        int degree = 0;  // m - k
        int k = 0;
        Matrix gram;     // I on the chosen cohomology basis
        int rank = 0;
        bool nondegenerate = false;
        bool symmetric = false;
        bool skew = false;
    };
    std::vector<Entry> entries;
    Verdict well_defined;  // representative independence under perturbation
};

// ModelError on non-unimodular models: without Stokes the value depends on
// the representative.
PairingReport intersection_pairing(const AlgebroidPresentation& p);

struct BettiReport {
    std::vector<int> dims;
    std::vector<int> odd_degrees_with_odd_dim;
    bool all_even = false;
    // for odd-dimensional H^{m-k}: the pairing there must be degenerate
    std::vector<std::pair<int, bool>> contrapositive;  // (degree, I degenerate)
    bool consistent = false;  // evenness or confirmed contrapositive
};

BettiReport betti_evenness_check(const AlgebroidPresentation& p);

}  // namespace klac
