// ============================================================================
// empl/countermodel.hpp — bounded exhaustive countermodel search
// ============================================================================
//
// Enumerates every model within the given bounds whose signature is the joint
// closure of the assumed-schema instances and the target, and returns the
// first model (in a fixed lexicographic order) that satisfies every assumed
// instance at all worlds while the target fails at some world.  If no such
// model exists in the bounded space the search reports exhaustion — which is
// a statement about the bounds, never a validity proof.
//
// Enumeration order: world count ascending, then relation bitmask ascending
// (bit w*n+u set means w relates to u), then interpretation bitmask ascending
// (bit f*n+w set means signature formula f holds at world w, formulas in
// signature order).  The first hit in this order is returned regardless of
// how the search is executed.
//
// ============================================================================

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "empl/kripke.hpp"
#include "empl/schema.hpp"

namespace empl {

struct SearchBounds {
    int max_worlds = 3;
    int max_atoms = 2;
    int max_agents = 2;
    std::uint64_t budget = 1ull << 24;  // maximum number of candidate models
};

struct FrameConstraints {
    bool require_reflexive = false;
    bool require_transitive = false;
    bool require_symmetric = false;
    // Require the interpretation to transport valid implications through the
    // knowledge operators: whenever x -> y is valid in the candidate and both
    // K[a]x and K[a]y are in the signature, K[a]x -> K[a]y must be valid too.
    // Used by the proof-kernel soundness cross-checks.
    bool require_k_monotone = false;
};

struct SearchOutcome {
    enum class Status { CountermodelFound, Exhausted } status = Status::Exhausted;
    std::optional<KripkeModel> model;
    std::uint64_t models_enumerated = 0;
    std::vector<Formula> assumed_instances;  // what "satisfies the assumptions" meant
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool frame_ok(const KripkeModel& m, const FrameConstraints& fc) {
    if (!fc.require_reflexive && !fc.require_transitive && !fc.require_symmetric) return true;
    FrameReport r = frame_properties(m);
    if (fc.require_reflexive && !r.reflexive) return false;
    if (fc.require_transitive && !r.transitive) return false;
    if (fc.require_symmetric && !r.symmetric) return false;
    return true;
}

inline bool k_monotone_ok(const KripkeModel& m) {
    // group interp K-formulas by agent
    std::map<std::string, std::vector<Formula>> by_agent;
    for (const auto& [f, bits] : m.interp)
        if (f.kind() == Formula::Kind::Knows) by_agent[f.agent().name].push_back(f);
    for (const auto& [agent, ks] : by_agent) {
        for (const Formula& kx : ks) {
            for (const Formula& ky : ks) {
                if (kx == ky) continue;
                if (is_valid_in_model(m, Formula::implies(kx.left(), ky.left())) &&
                    !is_valid_in_model(m, Formula::implies(kx, ky)))
                    return false;
            }
        }
    }
    return true;
}

}  // namespace detail

namespace detail {

inline void instantiate_over(const Schema& s, const std::vector<Formula>& pool,
                             const std::vector<AgentId>& agents, std::set<Formula>& out) {
    if (s.is_ground()) {
        out.insert(s.instantiate({}));
        return;
    }
    const auto& fmv = s.formula_metavars();
    const auto& amv = s.agent_metavars();
    if ((!fmv.empty() && pool.empty()) || (!amv.empty() && agents.empty())) return;
    std::vector<std::size_t> fidx(fmv.size(), 0);
    while (true) {
        std::vector<std::size_t> aidx(amv.size(), 0);
        while (true) {
            Bindings b;
            for (std::size_t k = 0; k < fmv.size(); ++k) b.formulas[fmv[k]] = pool[fidx[k]];
            for (std::size_t k = 0; k < amv.size(); ++k) b.agents[amv[k]] = agents[aidx[k]];
            out.insert(s.instantiate(b));
            if (amv.empty() || !next_assignment(aidx, agents.size())) break;
        }
        if (fmv.empty() || !next_assignment(fidx, pool.size())) break;
    }
}

}  // namespace detail

// The instance set and signature of a search.  Two rounds: metavariables
// first range over the closure of target + ground premises, which fixes the
// signature; the instances are then regenerated with metavariables ranging
// over the whole signature, keeping those whose atoms/K-formulas stay inside
// it.  The second round matches exactly how check_schema quantifies, so any
// model the search returns re-verifies under check_schema.
struct SearchSpace {
    std::set<Formula> signature;
    std::vector<Formula> assumed_instances;
};

inline SearchSpace build_search_space(const std::vector<Schema>& assumed, const Formula& target,
                                      const std::vector<AgentId>& agents) {
    std::vector<Formula> base_seed{target};
    for (const Schema& s : assumed)
        if (s.is_ground()) base_seed.push_back(s.instantiate({}));
    std::set<Formula> base = closure_of(base_seed);

    std::set<Formula> first_round;
    std::vector<Formula> base_pool(base.begin(), base.end());
    for (const Schema& s : assumed) detail::instantiate_over(s, base_pool, agents, first_round);

    std::vector<Formula> sig_seed(first_round.begin(), first_round.end());
    sig_seed.push_back(target);
    sig_seed.insert(sig_seed.end(), base_pool.begin(), base_pool.end());
    std::set<Formula> signature = closure_of(sig_seed);

    std::set<Formula> interp_part;
    for (const Formula& f : signature)
        if (f.is_interp_formula()) interp_part.insert(f);

    std::set<Formula> second_round;
    std::vector<Formula> sig_pool(signature.begin(), signature.end());
    for (const Schema& s : assumed) detail::instantiate_over(s, sig_pool, agents, second_round);

    SearchSpace space;
    for (const Formula& inst : second_round) {
        bool inside = true;
        for (const Formula& g : subformulas(inst))
            if (g.is_interp_formula() && !interp_part.count(g)) {
                inside = false;
                break;
            }
        if (inside) {
            space.assumed_instances.push_back(inst);
            std::set<Formula> c = closure(inst);
            signature.insert(c.begin(), c.end());
        }
    }
    space.signature = std::move(signature);
    return space;
}

inline SearchOutcome search_countermodel(const std::vector<Schema>& assumed,
                                         const Formula& target, const SearchBounds& bounds,
                                         const FrameConstraints& frame,
                                         const std::vector<AgentId>& agents) {
    SearchOutcome out;
    SearchSpace space = build_search_space(assumed, target, agents);
    out.assumed_instances = space.assumed_instances;
    std::set<Formula> signature = std::move(space.signature);

    std::vector<Formula> interp_formulas;
    std::set<std::string> atom_names;
    std::set<AgentId> agent_set;
    for (const Formula& f : signature) {
        if (f.is_interp_formula()) interp_formulas.push_back(f);
        if (f.kind() == Formula::Kind::Atom) atom_names.insert(f.atom_name());
        if (f.kind() == Formula::Kind::Knows) agent_set.insert(f.agent());
    }
    if (static_cast<int>(atom_names.size()) > bounds.max_atoms)
        throw BudgetExceeded("signature uses " + std::to_string(atom_names.size()) +
                             " atoms, bound is " + std::to_string(bounds.max_atoms));
    if (static_cast<int>(agent_set.size()) > bounds.max_agents)
        throw BudgetExceeded("signature uses " + std::to_string(agent_set.size()) +
                             " agents, bound is " + std::to_string(bounds.max_agents));

    long double estimate = 0;
    for (int n = 1; n <= bounds.max_worlds; ++n) {
        long double rel = std::pow(2.0L, n * n);
        long double itp = std::pow(2.0L, static_cast<long double>(interp_formulas.size()) * n);
        estimate += rel * itp;
    }
    if (estimate > static_cast<long double>(bounds.budget))
        throw BudgetExceeded("bounded space has ~" + std::to_string((double)estimate) +
                             " candidate models, budget is " + std::to_string(bounds.budget));

    for (int n = 1; n <= bounds.max_worlds; ++n) {
        KripkeModel m;
        for (int w = 0; w < n; ++w) m.worlds.push_back("w" + std::to_string(w));
        m.signature = signature;
        for (const Formula& f : interp_formulas)
            m.interp[f] = std::vector<std::uint8_t>(n, 0);

        std::uint64_t rel_space = 1ull << (n * n);
        std::size_t interp_bits = interp_formulas.size() * static_cast<std::size_t>(n);
        std::uint64_t interp_space = interp_bits >= 64 ? 0 : (1ull << interp_bits);
        if (interp_bits >= 64)
            throw BudgetExceeded("interpretation space too large to enumerate");

        for (std::uint64_t rel_mask = 0; rel_mask < rel_space; ++rel_mask) {
            m.relation.clear();
            for (int w = 0; w < n; ++w)
                for (int u = 0; u < n; ++u)
                    if (rel_mask & (1ull << (w * n + u))) m.relation.emplace(w, u);
            if (!detail::frame_ok(m, frame)) continue;

            for (std::uint64_t interp_mask = 0; interp_mask < interp_space; ++interp_mask) {
                for (std::size_t k = 0; k < interp_formulas.size(); ++k)
                    for (int w = 0; w < n; ++w)
                        m.interp[interp_formulas[k]][w] =
                            (interp_mask >> (k * n + w)) & 1ull ? 1 : 0;
                ++out.models_enumerated;

                bool assumptions_hold = true;
                for (const Formula& inst : out.assumed_instances) {
                    if (!is_valid_in_model(m, inst)) {
                        assumptions_hold = false;
                        break;
                    }
                }
                if (!assumptions_hold) continue;
                if (frame.require_k_monotone && !detail::k_monotone_ok(m)) continue;
                if (is_valid_in_model(m, target)) continue;

                out.status = SearchOutcome::Status::CountermodelFound;
                out.model = m;
                return out;
            }
        }
    }
    out.status = SearchOutcome::Status::Exhausted;
    return out;
}

}  // namespace empl
