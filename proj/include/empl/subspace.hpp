// ============================================================================
// empl/subspace.hpp — projective subspaces of finite-dimensional C^n
// ============================================================================
//
// A Subspace is stored as a column-orthonormal basis (ambient_dim x k, with
// k = 0 encoding the zero subspace).  The lattice operations are
//
//   ortho(S)   orthogonal complement
//   join(S,T)  closed linear span of the union (set union of subspaces is
//              not a subspace; span is the lattice join)
//   meet(S,T)  intersection, via ortho(join(ortho(S), ortho(T)))
//   leq(S,T)   S is contained in T (projector residual per basis column)
//
// Rank and membership decisions use an absolute tolerance (default 1e-9) on
// residual norms; ambient dimensions here stay small and bases
// well-conditioned, so no relative scaling is needed.
//
// truth(x, S) realizes "the proposition holds in state x" as membership of
// the state vector in the subspace.
//
// compile() maps a propositional formula to a subspace: atoms through an
// atom map, ~ to ortho, & to meet, | to join, and a -> b to the material
// form ortho(meet(A, ortho(B))), i.e. ~(a & ~b).  The conditional-as-
// containment reading is exposed separately via conditional_true() in both
// containment directions, so either convention can be tested against the
// lattice.
//
// ============================================================================

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "empl/formula.hpp"

namespace empl {

struct QlError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kSubspaceTol = 1e-9;

class Subspace {
public:
    // Columns of `basis` must be orthonormal; use span_of() for raw vectors.
    Subspace(int ambient_dim, Eigen::MatrixXcd basis, double tol = kSubspaceTol)
        : dim_(ambient_dim), basis_(std::move(basis)), tol_(tol) {
        if (dim_ <= 0) throw QlError("ambient dimension must be positive");
        if (basis_.rows() != dim_) throw QlError("basis rows do not match ambient dimension");
        if (basis_.cols() > dim_) throw QlError("basis has more columns than the dimension");
        if (basis_.cols() > 0) {
            Eigen::MatrixXcd gram = basis_.adjoint() * basis_;
            Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(basis_.cols(), basis_.cols());
            if ((gram - eye).cwiseAbs().maxCoeff() > 1e-7)
                throw QlError("basis columns are not orthonormal");
        }
    }

    static Subspace zero(int dim, double tol = kSubspaceTol) {
        return Subspace(dim, Eigen::MatrixXcd(dim, 0), tol);
    }
    static Subspace full(int dim, double tol = kSubspaceTol) {
        return Subspace(dim, Eigen::MatrixXcd::Identity(dim, dim), tol);
    }
    // Span of arbitrary (not necessarily independent) column vectors.
    static Subspace span_of(const Eigen::MatrixXcd& vectors, double tol = kSubspaceTol) {
        return Subspace(static_cast<int>(vectors.rows()), orthonormalize(vectors, tol), tol);
    }

    int ambient_dim() const { return dim_; }
    int rank() const { return static_cast<int>(basis_.cols()); }
    double tol() const { return tol_; }
    const Eigen::MatrixXcd& basis() const { return basis_; }
    bool is_zero() const { return rank() == 0; }
    bool is_full() const { return rank() == dim_; }

    Eigen::MatrixXcd projector() const { return basis_ * basis_.adjoint(); }

    static Eigen::MatrixXcd orthonormalize(const Eigen::MatrixXcd& m, double tol) {
        if (m.cols() == 0) return m;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
        int r = 0;
        for (int i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > tol) ++r;
        return svd.matrixU().leftCols(r);
    }

private:
    int dim_;
    Eigen::MatrixXcd basis_;
    double tol_;
};

namespace detail {

inline void check_same_dim(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim())
        throw QlError("ambient dimension mismatch: " + std::to_string(s.ambient_dim()) +
                      " vs " + std::to_string(t.ambient_dim()));
}

}  // namespace detail

inline Subspace ortho(const Subspace& s) {
    int dim = s.ambient_dim();
    if (s.is_zero()) return Subspace::full(dim, s.tol());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s.basis(), Eigen::ComputeFullU);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > s.tol()) ++r;
    return Subspace(dim, svd.matrixU().rightCols(dim - r), s.tol());
}

inline Subspace join(const Subspace& s, const Subspace& t) {
    detail::check_same_dim(s, t);
    Eigen::MatrixXcd cat(s.ambient_dim(), s.rank() + t.rank());
    cat << s.basis(), t.basis();
    return Subspace(s.ambient_dim(), Subspace::orthonormalize(cat, s.tol()), s.tol());
}

inline Subspace meet(const Subspace& s, const Subspace& t) {
    detail::check_same_dim(s, t);
    return ortho(join(ortho(s), ortho(t)));
}

// Largest residual of S's basis columns against T's projector; 0 for the
// zero subspace.
inline double leq_residual(const Subspace& s, const Subspace& t) {
    detail::check_same_dim(s, t);
    if (s.is_zero()) return 0.0;
    Eigen::MatrixXcd residual = s.basis() - t.projector() * s.basis();
    return residual.colwise().norm().maxCoeff();
}

inline bool leq(const Subspace& s, const Subspace& t) {
    return leq_residual(s, t) <= s.tol();
}

inline double equality_residual(const Subspace& s, const Subspace& t) {
    return std::max(leq_residual(s, t), leq_residual(t, s));
}

inline bool subspace_equal(const Subspace& s, const Subspace& t) {
    return leq(s, t) && leq(t, s);
}

inline bool projectors_commute(const Subspace& s, const Subspace& t, double tol = 1e-8) {
    detail::check_same_dim(s, t);
    Eigen::MatrixXcd ps = s.projector(), pt = t.projector();
    return (ps * pt - pt * ps).cwiseAbs().maxCoeff() <= tol;
}

// Which containment realizes "s -> t is true".  ForwardSubset is the
// standard reading (the antecedent's subspace lies inside the consequent's);
// ReversedSubset is the literal converse, exposed for comparison.
enum class ConditionalReading { ForwardSubset, ReversedSubset };

inline bool conditional_true(const Subspace& s, const Subspace& t, ConditionalReading reading) {
    return reading == ConditionalReading::ForwardSubset ? leq(s, t) : leq(t, s);
}

// ----------------------------------------------------------------------------
// States.
// ----------------------------------------------------------------------------

class StateVector {
public:
    StateVector(int ambient_dim, Eigen::VectorXcd amplitudes, double tol = kSubspaceTol)
        : dim_(ambient_dim), amp_(std::move(amplitudes)), tol_(tol) {
        if (amp_.size() != dim_) throw QlError("state length does not match dimension");
        if (std::abs(amp_.norm() - 1.0) > tol_) throw QlError("state vector is not normalized");
    }

    int ambient_dim() const { return dim_; }
    const Eigen::VectorXcd& amplitudes() const { return amp_; }
    double tol() const { return tol_; }

private:
    int dim_;
    Eigen::VectorXcd amp_;
    double tol_;
};

inline bool truth(const StateVector& x, const Subspace& s) {
    if (x.ambient_dim() != s.ambient_dim()) throw QlError("state/subspace dimension mismatch");
    Eigen::VectorXcd residual = x.amplitudes() - s.projector() * x.amplitudes();
    return residual.norm() <= std::max(x.tol(), s.tol());
}

// ----------------------------------------------------------------------------
// Formula compilation.
// ----------------------------------------------------------------------------

inline Subspace compile(const Formula& f, const std::map<std::string, Subspace>& atom_map) {
    switch (f.kind()) {
        case Formula::Kind::Atom: {
            auto it = atom_map.find(f.atom_name());
            if (it == atom_map.end()) throw QlError("unmapped atom: " + f.atom_name());
            return it->second;
        }
        case Formula::Kind::Falsum: {
            if (atom_map.empty()) throw QlError("cannot determine dimension for falsum");
            return Subspace::zero(atom_map.begin()->second.ambient_dim());
        }
        case Formula::Kind::Not:
            return ortho(compile(f.left(), atom_map));
        case Formula::Kind::And:
            return meet(compile(f.left(), atom_map), compile(f.right(), atom_map));
        case Formula::Kind::Or:
            return join(compile(f.left(), atom_map), compile(f.right(), atom_map));
        case Formula::Kind::Implies: {
            Subspace a = compile(f.left(), atom_map);
            Subspace b = compile(f.right(), atom_map);
            return ortho(meet(a, ortho(b)));  // ~(a & ~b)
        }
        case Formula::Kind::Box:
        case Formula::Kind::Diamond:
        case Formula::Kind::Knows:
            throw QlError("modal operator has no subspace semantics: " + render(f));
    }
    throw std::logic_error("unreachable");
}

// ----------------------------------------------------------------------------
// Plain-text serialization: complex entries as "re im" pairs.
//
//   subspace <dim> <rank>
//   <dim pairs per basis column, one column per line>
//   state <dim>
//   <dim pairs on one line>
// ----------------------------------------------------------------------------

inline std::string write_subspace(const Subspace& s) {
    std::ostringstream out;
    out.precision(17);
    out << "subspace " << s.ambient_dim() << " " << s.rank() << "\n";
    for (int c = 0; c < s.rank(); ++c) {
        for (int r = 0; r < s.ambient_dim(); ++r) {
            if (r) out << " ";
            out << s.basis()(r, c).real() << " " << s.basis()(r, c).imag();
        }
        out << "\n";
    }
    return out.str();
}

inline Subspace read_subspace(std::istream& in) {
    std::string kw;
    int dim = 0, rank = 0;
    if (!(in >> kw >> dim >> rank) || kw != "subspace")
        throw QlError("expected 'subspace <dim> <rank>'");
    Eigen::MatrixXcd basis(dim, rank);
    for (int c = 0; c < rank; ++c)
        for (int r = 0; r < dim; ++r) {
            double re, im;
            if (!(in >> re >> im)) throw QlError("truncated subspace data");
            basis(r, c) = {re, im};
        }
    return Subspace(dim, basis);
}

inline std::string write_state(const StateVector& x) {
    std::ostringstream out;
    out.precision(17);
    out << "state " << x.ambient_dim() << "\n";
    for (int r = 0; r < x.ambient_dim(); ++r) {
        if (r) out << " ";
        out << x.amplitudes()(r).real() << " " << x.amplitudes()(r).imag();
    }
    out << "\n";
    return out.str();
}

inline StateVector read_state(std::istream& in) {
    std::string kw;
    int dim = 0;
    if (!(in >> kw >> dim) || kw != "state") throw QlError("expected 'state <dim>'");
    Eigen::VectorXcd amp(dim);
    for (int r = 0; r < dim; ++r) {
        double re, im;
        if (!(in >> re >> im)) throw QlError("truncated state data");
        amp(r) = {re, im};
    }
    return StateVector(dim, amp);
}

}  // namespace empl
