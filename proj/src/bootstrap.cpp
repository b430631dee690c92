#include "cwave/bootstrap.hpp"

#include <sstream>

namespace cwave {

std::optional<Rational> initial_exponent(int n, const Rational& kappa) {
    if (n < 1) throw ConfigError("initial_exponent: n must be >= 1");
    if (kappa <= 0) throw ConfigError("initial_exponent: kappa must be positive");
    if (n == 1) return std::nullopt;
    if (n == 2) return Rational(2) + 4 * kappa;
    return Rational(2 * n, n - 2);
}

StepOutcome bootstrap_step(const BootstrapState& state) {
    if (state.n < 2) throw ConfigError("bootstrap_step: needs n >= 2");
    const Rational P = state.q / (1 + 2 * state.kappa);
    const Rational two_over_n(2, state.n);
    if (Rational(1) / P < two_over_n) {
        return {StepOutcome::Done, P, std::nullopt};  // any Q in [1, inf] works
    }
    const Rational inv_Q = Rational(1) / P - two_over_n;
    if (inv_Q < 0) throw Error("bootstrap_step: negative 1/Q cannot happen");
    if (inv_Q == 0) {
        // 1/Q = 0 is the borderline where Q can already be taken arbitrarily
        // large; report Done with unbounded Q.
        return {StepOutcome::Done, P, std::nullopt};
    }
    const Rational Q = Rational(1) / inv_Q;
    if (Q == state.q) return {StepOutcome::Stalled, P, Q};
    return {StepOutcome::Next, P, Q};
}

Rational gain_lower_bound(int n, const Rational& kappa) {
    if (kappa <= 0) throw ConfigError("gain_lower_bound: kappa must be positive");
    if (n == 2) return Rational(1) - 2 * kappa / (2 + 4 * kappa);
    if (n < 2) throw ConfigError("gain_lower_bound: needs n >= 2");
    const Rational critical(2, n - 2);
    if (kappa >= critical)
        throw ConfigError("gain_lower_bound: kappa not admissible for n = " +
                          std::to_string(n));
    return Rational(2, n) - kappa * Rational(n - 2, n);
}

BootstrapTrace run_bootstrap(int n, const Rational& kappa, int max_iter) {
    if (max_iter < 1) throw ConfigError("run_bootstrap: max_iter must be >= 1");
    BootstrapTrace trace;
    trace.n = n;
    trace.kappa = kappa;

    bool admissible = n <= 2;
    if (n >= 3 && kappa < Rational(2, n - 2)) admissible = true;
    if (admissible && n >= 2) trace.gain_bound = gain_lower_bound(n, kappa);

    auto q0 = initial_exponent(n, kappa);
    if (!q0) {
        trace.status = BootstrapStatus::Done;  // n = 1: nothing to do
        return trace;
    }

    BootstrapState state{n, kappa, *q0};
    trace.states.push_back(state.q);
    trace.status = BootstrapStatus::MaxIter;
    for (int it = 0; it < max_iter; ++it) {
        const StepOutcome out = bootstrap_step(state);
        trace.steps.push_back({state.q, out.P, out.Q});
        if (out.kind == StepOutcome::Done) {
            trace.status = BootstrapStatus::Done;
            break;
        }
        if (out.kind == StepOutcome::Stalled) {
            trace.status = BootstrapStatus::Stalled;
            break;
        }
        state.q = *out.Q;
        trace.states.push_back(state.q);
    }

    if (admissible && trace.status == BootstrapStatus::Done) {
        // Termination certificate: trace length <= ceil((1/q0)/gain) + 1.
        const BigInt bound = ceil_rational((Rational(1) / *q0) / *trace.gain_bound) + 1;
        if (BigInt(trace.states.size()) > bound)
            throw Error("run_bootstrap: termination bound violated");
    }
    return trace;
}

namespace {
const char* status_name(BootstrapStatus s) {
    switch (s) {
        case BootstrapStatus::Done: return "done";
        case BootstrapStatus::Stalled: return "stalled";
        case BootstrapStatus::MaxIter: return "max_iter";
    }
    return "?";
}
}  // namespace

nlohmann::json BootstrapTrace::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["kappa"] = format_rational(kappa);
    j["status"] = status_name(status);
    j["states"] = nlohmann::json::array();
    for (const Rational& q : states) j["states"].push_back(format_rational(q));
    j["gain_bound"] = gain_bound ? nlohmann::json(format_rational(*gain_bound))
                                 : nlohmann::json(nullptr);
    j["steps"] = nlohmann::json::array();
    int k = 0;
    for (const StepRecord& s : steps) {
        j["steps"].push_back({{"step", k++},
                              {"q", format_rational(s.q)},
                              {"P", format_rational(s.P)},
                              {"Q", s.Q ? nlohmann::json(format_rational(*s.Q))
                                        : nlohmann::json("inf")}});
    }
    return j;
}

std::string BootstrapTrace::to_csv() const {
    std::ostringstream out;
    out << "step,q,P,Q\n";
    int k = 0;
    for (const StepRecord& s : steps) {
        out << k++ << "," << format_rational(s.q) << "," << format_rational(s.P) << ","
            << (s.Q ? format_rational(*s.Q) : std::string("inf")) << "\n";
    }
    return out.str();
}

}  // namespace cwave
