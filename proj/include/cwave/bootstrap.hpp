#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "cwave/rational.hpp"

namespace cwave {

/// One state of the exponent recursion: dimension n, growth exponent kappa,
/// current integrability exponent q (finite; reaching q = infinity is the
/// Done terminal status).
struct BootstrapState {
    int n = 3;
    Rational kappa;
    Rational q;
};

enum class BootstrapStatus { Done, Stalled, MaxIter };

struct StepOutcome {
    enum Kind { Next, Done, Stalled } kind;
    Rational P;                 // q / (1 + 2 kappa)
    std::optional<Rational> Q;  // empty means Q may be taken infinite
};

struct StepRecord {
    Rational q, P;
    std::optional<Rational> Q;
};

struct BootstrapTrace {
    int n = 0;
    Rational kappa;
    std::vector<Rational> states;  // q values visited, strictly increasing
    std::vector<StepRecord> steps;
    BootstrapStatus status = BootstrapStatus::Done;
    std::optional<Rational> gain_bound;  // set when kappa is admissible

    nlohmann::json to_json() const;
    std::string to_csv() const;  // step,q,P,Q
};

/// Starting exponent q0; empty means there is nothing to do (n = 1).
std::optional<Rational> initial_exponent(int n, const Rational& kappa);

/// One induction step: P = q/(1+2k); Done when 1/P < 2/n, else
/// 1/Q = 1/P - 2/n, Stalled when Q = q.
StepOutcome bootstrap_step(const BootstrapState& state);

/// Guaranteed per-step improvement of 1/q for admissible kappa; throws
/// ConfigError at or beyond the critical exponent.
Rational gain_lower_bound(int n, const Rational& kappa);

BootstrapTrace run_bootstrap(int n, const Rational& kappa, int max_iter = 64);

}  // namespace cwave
