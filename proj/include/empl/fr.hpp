// ============================================================================
// empl/fr.hpp — state-vector simulation of the Frauchiger-Renner protocol
// ============================================================================
//
// Four qubits in the fixed order R, A, S, B (big-endian: R is the most
// significant bit of a basis index).  The protocol is a sequence of linear
// isometries:
//
//   1. prepare R as sqrt(1/3)|0> + sqrt(2/3)|1>, memories A, B and spin S
//      in |0>
//   2. copy R into Alice's memory A            (|x>_R |0>_A -> |x>_R |x>_A)
//   3. prepare S conditioned on A: |0>_S if a=0, (|0>+|1>)/sqrt(2) if a=1
//   4. copy S into Bob's memory B
//
// yielding the Hardy state (|0000> + |1100> + |1111>)/sqrt(3).
//
// Outside observers measure whole labs in the rotated basis
//   |fail> = (|00> + |11>)/sqrt(2),   |ok> = (|00> - |11>)/sqrt(2)
// on R,A (Ursula) and on S,B (Wigner).  |ok> is the unique completion (up to
// phase) orthogonal to |fail> inside span{|00>,|11>}.
//
// joint_amplitude contracts the state against the chosen outcome bras.  When
// the constraints cover all four qubits the result is the bare amplitude;
// otherwise the norm of the projected residual vector is returned, so a zero
// result always means "this outcome combination is impossible".
//
// Everything is exact to machine precision; assertions use 1e-12.
//
// ============================================================================

#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace empl::fr {

using Complex = std::complex<double>;

inline constexpr double kTol = 1e-12;

struct FrError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pure state over named single-qubit subsystems, big-endian amplitude
// indexing: subsystem 0 is the most significant bit.
struct QState {
    std::vector<char> labels;
    std::vector<Complex> amp;

    explicit QState(std::vector<char> subsystem_labels)
        : labels(std::move(subsystem_labels)), amp(std::size_t{1} << labels.size(), 0.0) {}

    int arity() const { return static_cast<int>(labels.size()); }
    std::size_t dim() const { return amp.size(); }

    int subsystem(char label) const {
        for (int k = 0; k < arity(); ++k)
            if (labels[k] == label) return k;
        throw FrError(std::string("no subsystem labelled ") + label);
    }

    int bit_of(std::size_t index, int subsystem_pos) const {
        return static_cast<int>((index >> (arity() - 1 - subsystem_pos)) & 1u);
    }

    double norm() const {
        double n2 = 0;
        for (const Complex& a : amp) n2 += std::norm(a);
        return std::sqrt(n2);
    }

    void require_normalized() const {
        if (std::abs(norm() - 1.0) > kTol) throw FrError("state norm drifted from 1");
    }
};

// ----------------------------------------------------------------------------
// Protocol isometries.
// ----------------------------------------------------------------------------

// |x>_src |0>_dst -> |x>_src |x>_dst, extended linearly.  Requires the
// destination qubit to start in |0>.
inline void apply_copy(QState& s, char src, char dst) {
    int ps = s.subsystem(src), pd = s.subsystem(dst);
    std::size_t dst_bit = std::size_t{1} << (s.arity() - 1 - pd);
    for (std::size_t i = 0; i < s.dim(); ++i)
        if ((i & dst_bit) && std::abs(s.amp[i]) > kTol)
            throw FrError("copy target qubit is not in |0>");
    for (std::size_t i = s.dim(); i-- > 0;) {
        if (s.bit_of(i, ps) == 1 && !(i & dst_bit)) {
            s.amp[i | dst_bit] = s.amp[i];
            s.amp[i] = 0.0;
        }
    }
    s.require_normalized();
}

// If control=1: |0>_target -> (|0> + |1>)/sqrt(2); if control=0: leave |0>.
// The target must start in |0>.
inline void apply_conditional_superpose(QState& s, char control, char target) {
    int pc = s.subsystem(control), pt = s.subsystem(target);
    std::size_t t_bit = std::size_t{1} << (s.arity() - 1 - pt);
    for (std::size_t i = 0; i < s.dim(); ++i)
        if ((i & t_bit) && std::abs(s.amp[i]) > kTol)
            throw FrError("preparation target qubit is not in |0>");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (s.bit_of(i, pc) == 1 && !(i & t_bit)) {
            Complex a = s.amp[i];
            s.amp[i] = a * inv_sqrt2;
            s.amp[i | t_bit] = a * inv_sqrt2;
        }
    }
    s.require_normalized();
}

// ----------------------------------------------------------------------------
// States.
// ----------------------------------------------------------------------------

// The two-qubit entangled record of one observed measurement: starting from
// (|0>+|1>)/sqrt(2) on R and |0> on the memory A, the copy interaction gives
// (|00> + |11>)/sqrt(2).
inline QState wigner_friend_state() {
    QState s({'R', 'A'});
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    s.amp[0b00] = inv_sqrt2;  // |0>_R |0>_A
    s.amp[0b10] = inv_sqrt2;  // |1>_R |0>_A
    apply_copy(s, 'R', 'A');
    return s;
}

// The full four-qubit protocol state (|0000> + |1100> + |1111>)/sqrt(3).
inline QState fr_state() {
    QState s({'R', 'A', 'S', 'B'});
    s.amp[0b0000] = std::sqrt(1.0 / 3.0);
    s.amp[0b1000] = std::sqrt(2.0 / 3.0);
    apply_copy(s, 'R', 'A');
    apply_conditional_superpose(s, 'A', 'S');
    apply_copy(s, 'S', 'B');
    s.require_normalized();
    return s;
}

// ----------------------------------------------------------------------------
// Measurement outcomes.
// ----------------------------------------------------------------------------

enum class Outcome : std::uint8_t { A0, A1, B0, B1, UOk, UFail, WOk, WFail };

inline std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::A0: return "a=0";
        case Outcome::A1: return "a=1";
        case Outcome::B0: return "b=0";
        case Outcome::B1: return "b=1";
        case Outcome::UOk: return "u=ok";
        case Outcome::UFail: return "u=fail";
        case Outcome::WOk: return "w=ok";
        case Outcome::WFail: return "w=fail";
    }
    return "?";
}

// A bra over one or two named qubits.
struct OutcomeProjector {
    Outcome label;
    std::vector<char> subsystems;    // one ('A'/'B') or two ('R','A' / 'S','B')
    std::vector<Complex> bra;        // length 2 or 4, big-endian over `subsystems`
};

inline std::vector<OutcomeProjector> projectors() {
    const double s = 1.0 / std::sqrt(2.0);
    return {
        {Outcome::A0, {'A'}, {1.0, 0.0}},
        {Outcome::A1, {'A'}, {0.0, 1.0}},
        {Outcome::B0, {'B'}, {1.0, 0.0}},
        {Outcome::B1, {'B'}, {0.0, 1.0}},
        {Outcome::UFail, {'R', 'A'}, {s, 0.0, 0.0, s}},
        {Outcome::UOk, {'R', 'A'}, {s, 0.0, 0.0, -s}},
        {Outcome::WFail, {'S', 'B'}, {s, 0.0, 0.0, s}},
        {Outcome::WOk, {'S', 'B'}, {s, 0.0, 0.0, -s}},
    };
}

inline const OutcomeProjector& projector(Outcome o) {
    static const std::vector<OutcomeProjector> all = projectors();
    for (const OutcomeProjector& p : all)
        if (p.label == o) return p;
    throw FrError("unknown outcome");
}

// Contracts `state` against the bra of each listed outcome.  Returns the
// residual state over the remaining subsystems (un-normalized; its squared
// norm is the joint probability of the outcome combination).
inline QState contract(const QState& state, const std::vector<Outcome>& constraints) {
    std::set<char> used;
    std::vector<const OutcomeProjector*> ps;
    for (Outcome o : constraints) {
        const OutcomeProjector& p = projector(o);
        for (char c : p.subsystems)
            if (!used.insert(c).second)
                throw FrError(std::string("conflicting constraints on subsystem ") + c);
        ps.push_back(&p);
    }

    QState cur = state;
    for (const OutcomeProjector* p : ps) {
        std::vector<int> pos;
        for (char c : p->subsystems) pos.push_back(cur.subsystem(c));
        std::vector<char> rest_labels;
        for (char c : cur.labels)
            if (!std::count(p->subsystems.begin(), p->subsystems.end(), c))
                rest_labels.push_back(c);
        QState next(rest_labels);
        for (std::size_t i = 0; i < cur.dim(); ++i) {
            if (std::abs(cur.amp[i]) == 0.0) continue;
            std::size_t sub_index = 0;
            for (int pp : pos) sub_index = (sub_index << 1) | cur.bit_of(i, pp);
            std::size_t rest_index = 0;
            for (int k = 0; k < cur.arity(); ++k) {
                if (std::count(pos.begin(), pos.end(), k)) continue;
                rest_index = (rest_index << 1) | cur.bit_of(i, k);
            }
            next.amp[rest_index] += std::conj(p->bra[sub_index]) * cur.amp[i];
        }
        cur = std::move(next);
    }
    return cur;
}

// Full contraction gives the amplitude itself; a partial contraction reports
// the residual norm (zero exactly when the combination is impossible).
inline Complex joint_amplitude(const QState& state, const std::vector<Outcome>& constraints) {
    QState residual = contract(state, constraints);
    if (residual.arity() == 0) return residual.amp[0];
    return Complex(residual.norm(), 0.0);
}

inline double joint_probability(const QState& state, const std::vector<Outcome>& constraints) {
    QState residual = contract(state, constraints);
    double n2 = 0;
    for (const Complex& a : residual.amp) n2 += std::norm(a);
    return n2;
}

// ----------------------------------------------------------------------------
// The deterministic inference chain.
// ----------------------------------------------------------------------------

struct ChainCheck {
    std::string name;       // e.g. "u=ok => b=1"
    std::string via;        // the joint event whose probability must vanish
    double residual = 0.0;  // probability of the forbidden event
    double conditional = 0.0;  // resulting conditional probability
    bool holds = false;
};

struct InferenceChainReport {
    std::vector<ChainCheck> checks;
    double p_uok = 0.0;
    double p_ok_ok = 0.0;        // P[u=ok and w=ok]
    bool paradox = false;        // chain holds and yet P[ok, ok] > 0
    std::string verdict;
};

inline InferenceChainReport inference_chain_report() {
    QState psi = fr_state();
    InferenceChainReport rep;
    rep.p_uok = joint_probability(psi, {Outcome::UOk});
    rep.p_ok_ok = joint_probability(psi, {Outcome::UOk, Outcome::WOk});

    auto add = [&](const std::string& name, std::vector<Outcome> forbidden,
                   std::vector<Outcome> given) {
        ChainCheck c;
        c.name = name;
        c.via = "P[" + to_string(forbidden[0]) + ", " + to_string(forbidden[1]) + "] = 0";
        c.residual = joint_probability(psi, forbidden);
        double pg = joint_probability(psi, given);
        c.conditional = pg > 0 ? 1.0 - c.residual / pg : 0.0;
        c.holds = c.residual <= kTol && pg > kTol;
        rep.checks.push_back(c);
    };
    add("u=ok => b=1", {Outcome::UOk, Outcome::B0}, {Outcome::UOk});
    add("b=1 => a=1", {Outcome::A0, Outcome::B1}, {Outcome::B1});
    add("a=1 => w=fail", {Outcome::A1, Outcome::WOk}, {Outcome::A1});

    bool chain = rep.checks[0].holds && rep.checks[1].holds && rep.checks[2].holds;
    bool possible = rep.p_ok_ok > kTol;
    rep.paradox = chain && possible;
    std::ostringstream v;
    if (rep.paradox) {
        v << "paradox: u=w=ok occurs with probability " << rep.p_ok_ok
          << ", yet u=ok => b=1 => a=1 => w=fail";
    } else {
        v << "no paradox detected";
    }
    rep.verdict = v.str();
    return rep;
}

// The chain facts as certified atomic propositions, for injection into
// Kripke interpretations by the command-line harness.
inline std::vector<std::pair<std::string, int>> certified_propositions() {
    InferenceChainReport rep = inference_chain_report();
    return {
        {"b1_given_uok", rep.checks[0].holds ? 1 : 0},
        {"a1_given_b1", rep.checks[1].holds ? 1 : 0},
        {"wfail_given_a1", rep.checks[2].holds ? 1 : 0},
        {"uok_wok_possible", rep.p_ok_ok > kTol ? 1 : 0},
    };
}

}  // namespace empl::fr
