// ============================================================================
// empl/qlattice.hpp — randomized verification of the subspace lattice
// ============================================================================
//
// Seeded trial loops over random subspaces in small dimensions:
//
//   run_lattice_laws            involution, De Morgan, complement laws, and
//                               orthomodularity
//   verify_lemma_contraposition whenever S <= T, ortho(T) <= ortho(S)
//   verify_lemma_connective_identity
//                               S <= T  iff  the compiled form ~(s & ~t) is
//                               the full space — the reverse direction is
//                               checked for commuting (simultaneously
//                               diagonalizable) pairs; non-commuting pairs
//                               where the compiled form collapses to the full
//                               space without containment are counted
//                               separately, not as failures
//   nondistributivity_witness_dim2
//                               a concrete triple where meet fails to
//                               distribute over join
//
// Sampling: complex Gaussian matrices orthonormalized, rank uniform in
// [0, dim]; every loop is seeded for reproducibility.
//
// ============================================================================

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "empl/parse.hpp"
#include "empl/subspace.hpp"

namespace empl {

// std::mt19937_64 with explicitly coded distributions, so streams are stable
// across standard libraries.
class SubspaceSampler {
public:
    explicit SubspaceSampler(std::uint64_t seed) : rng_(seed) {}

    double gaussian() {
        // Box-Muller; both uniforms strictly inside (0,1]
        double u1 = (static_cast<double>(rng_()) + 1.0) / (static_cast<double>(rng_.max()) + 2.0);
        double u2 = (static_cast<double>(rng_()) + 1.0) / (static_cast<double>(rng_.max()) + 2.0);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Eigen::MatrixXcd gaussian_matrix(int rows, int cols) {
        Eigen::MatrixXcd m(rows, cols);
        for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r) m(r, c) = std::complex<double>(gaussian(), gaussian());
        return m;
    }

    Subspace random_subspace(int dim) {
        int rank = uniform_int(0, dim);
        if (rank == 0) return Subspace::zero(dim);
        return Subspace::span_of(gaussian_matrix(dim, rank));
    }

    // S contained in T: S spans random combinations of T's basis columns.
    Subspace random_subspace_inside(const Subspace& t) {
        if (t.is_zero()) return t;
        int rank = uniform_int(0, t.rank());
        if (rank == 0) return Subspace::zero(t.ambient_dim());
        return Subspace::span_of(t.basis() * gaussian_matrix(t.rank(), rank));
    }

    Eigen::MatrixXcd random_unitary(int dim) {
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian_matrix(dim, dim));
        return qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
    }

    // A pair of projectors diagonal in a common random basis.
    std::pair<Subspace, Subspace> commuting_pair(int dim) {
        Eigen::MatrixXcd u = random_unitary(dim);
        auto pick = [&](int) {
            std::vector<int> cols;
            for (int c = 0; c < dim; ++c)
                if (uniform_int(0, 1)) cols.push_back(c);
            Eigen::MatrixXcd basis(dim, static_cast<int>(cols.size()));
            for (std::size_t k = 0; k < cols.size(); ++k) basis.col(k) = u.col(cols[k]);
            return Subspace(dim, basis);
        };
        return {pick(0), pick(1)};
    }

private:
    std::mt19937_64 rng_;
};

struct TrialReport {
    std::string name;
    int dim = 0;
    int trials = 0;
    int applicable = 0;          // trials where the checked premise held
    int failures = 0;
    int noncommuting_logged = 0;  // connective identity only
    double max_residual = 0.0;

    bool ok() const { return failures == 0; }
};

inline TrialReport run_lattice_laws(int dim, int trials, std::uint64_t seed) {
    SubspaceSampler sampler(seed);
    TrialReport rep{"lattice_laws", dim, trials};
    Subspace full = Subspace::full(dim), zero = Subspace::zero(dim);
    for (int t = 0; t < trials; ++t) {
        Subspace s = sampler.random_subspace(dim);
        Subspace u = sampler.random_subspace(dim);
        ++rep.applicable;
        double r = 0.0;
        r = std::max(r, equality_residual(ortho(ortho(s)), s));                      // involution
        r = std::max(r, equality_residual(ortho(join(s, u)), meet(ortho(s), ortho(u))));  // De Morgan
        r = std::max(r, equality_residual(join(s, ortho(s)), full));                 // complement
        r = std::max(r, equality_residual(meet(s, ortho(s)), zero));
        // orthomodularity on a constructed nested pair
        Subspace inner = sampler.random_subspace_inside(u);
        r = std::max(r, equality_residual(join(inner, meet(ortho(inner), u)), u));
        rep.max_residual = std::max(rep.max_residual, r);
        if (r > kSubspaceTol) ++rep.failures;
    }
    return rep;
}

inline TrialReport verify_lemma_contraposition(int dim, int trials, std::uint64_t seed) {
    SubspaceSampler sampler(seed);
    TrialReport rep{"lemma_contraposition", dim, trials};
    for (int t = 0; t < trials; ++t) {
        Subspace s = Subspace::zero(dim), u = Subspace::zero(dim);
        if (t % 2 == 0) {
            u = sampler.random_subspace(dim);
            s = sampler.random_subspace_inside(u);  // guarantees the premise
        } else {
            s = sampler.random_subspace(dim);
            u = sampler.random_subspace(dim);
        }
        if (!leq(s, u)) continue;  // vacuous trial
        ++rep.applicable;
        double r = leq_residual(ortho(u), ortho(s));
        rep.max_residual = std::max(rep.max_residual, r);
        if (r > kSubspaceTol) ++rep.failures;
    }
    return rep;
}

inline TrialReport verify_lemma_connective_identity(int dim, int trials, std::uint64_t seed) {
    SubspaceSampler sampler(seed);
    TrialReport rep{"lemma_connective_identity", dim, trials};
    Subspace full = Subspace::full(dim);
    for (int t = 0; t < trials; ++t) {
        Subspace s = Subspace::zero(dim), u = Subspace::zero(dim);
        bool constructed_commuting = t % 2 == 0;
        if (constructed_commuting) {
            auto [a, b] = sampler.commuting_pair(dim);
            s = a;
            u = b;
        } else {
            s = sampler.random_subspace(dim);
            u = sampler.random_subspace(dim);
        }
        ++rep.applicable;
        Subspace compiled = ortho(meet(s, ortho(u)));  // ~(s & ~u)
        bool tautology = subspace_equal(compiled, full);
        bool contained = leq(s, u);
        if (contained) {
            double r = equality_residual(compiled, full);
            rep.max_residual = std::max(rep.max_residual, r);
            if (r > kSubspaceTol) ++rep.failures;  // forward direction is unconditional
        } else if (tautology) {
            // reverse direction only binds commuting pairs
            if (constructed_commuting || projectors_commute(s, u))
                ++rep.failures;
            else
                ++rep.noncommuting_logged;
        }
    }
    return rep;
}

// The dim-2 counterexample to distributivity: p the x-axis, q the diagonal.
//   (p | q) & ~p   = the y-axis line,       while
//   (p & ~p) | (q & ~p) = the zero subspace.
struct NondistributivityWitness {
    Subspace p, q;
    Subspace lhs, rhs;
    bool witnessed = false;
};

inline NondistributivityWitness nondistributivity_witness_dim2() {
    Eigen::MatrixXcd e1(2, 1), diag(2, 1);
    e1 << 1.0, 0.0;
    diag << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    NondistributivityWitness w{Subspace(2, e1), Subspace::span_of(diag),
                               Subspace::zero(2), Subspace::zero(2), false};
    std::map<std::string, Subspace> atoms{{"p", w.p}, {"q", w.q}};
    w.lhs = compile(parse_formula("(p | q) & ~p"), atoms);
    w.rhs = compile(parse_formula("(p & ~p) | (q & ~p)"), atoms);
    w.witnessed = !subspace_equal(w.lhs, w.rhs);
    return w;
}

}  // namespace empl
