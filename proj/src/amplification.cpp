// Copyright 2026 The gdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gdsim/amplification.hpp"

#include <algorithm>
#include <cmath>

#include "gdsim/kernels.hpp"

namespace gdsim {

namespace {

bool label_is_good(const RegisterLayout& layout, std::uint64_t flat) {
    const std::uint64_t d = static_cast<std::uint64_t>(layout.d_levels);
    const std::uint64_t bits_mask = (std::uint64_t{1} << layout.two_level_count) - 1;
    const std::uint64_t j2 = flat % d;
    std::uint64_t t = flat / d;
    const std::uint64_t bits2 = t & bits_mask;
    t >>= layout.two_level_count;
    const std::uint64_t j1 = t % d;
    const std::uint64_t bits1 = t / d;
    return j1 == j2 && (bits1 & bits2) != 0;
}

struct ScheduleCounts {
    bool found = false;
    long q_applications = 0;
    long preparations = 0;
};

// Shared schedule. `trial(j, rng)` runs one prepare/iterate/measure round
// and reports whether it measured a good label.
template <class Trial>
ScheduleCounts run_schedule(const QSearchConfig& config, double m_cap, Rng& rng, Trial&& trial) {
    if (!(config.lambda > 1.0 && config.lambda < 2.0)) {
        throw InputError("lambda must lie in (1, 2)");
    }
    if (config.cutoff < 1) throw InputError("cutoff must be at least 1");
    m_cap = std::max(m_cap, 2.0);
    // Hard stop on rounds so a pathological stream of j == 0 draws cannot
    // spin forever; unreachable in normal operation.
    const long max_rounds = 64 + 8 * config.cutoff;
    ScheduleCounts counts;
    double m = 1.0;
    while (counts.q_applications <= config.cutoff && counts.preparations < max_rounds) {
        const long j = static_cast<long>(rng.uniform() * m);
        ++counts.preparations;
        counts.q_applications += j;
        if (trial(j, rng)) {
            counts.found = true;
            return counts;
        }
        m = std::min(config.lambda * m, m_cap);
    }
    return counts;
}

}  // namespace

GoodBadDecomposition decompose_good_bad(const StateVector& psi) {
    if (psi.layout.copies != 2) throw ShapeError("decomposition expects a two-copy register");
    std::vector<Complex> good_part(psi.amps.size(), Complex{0.0, 0.0});
    std::vector<Complex> bad_part(psi.amps.size(), Complex{0.0, 0.0});
    double good_sq = 0.0;
    double bad_sq = 0.0;
    for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
        const Complex amp = psi.amps[i];
        if (label_is_good(psi.layout, i)) {
            good_part[i] = amp;
            good_sq += std::norm(amp);
        } else {
            bad_part[i] = amp;
            bad_sq += std::norm(amp);
        }
    }
    GoodBadDecomposition out;
    out.a = std::clamp(good_sq, 0.0, 1.0);
    // The normalized projections of psi already overlap psi with the real
    // nonnegative coefficients sqrt(a) and sqrt(1-a); no extra phase fix is
    // needed. Members whose projection is exactly zero are absent.
    if (good_sq > 0.0) {
        const double inv = 1.0 / std::sqrt(good_sq);
        for (Complex& c : good_part) c *= inv;
        out.good = StateVector::from_amplitudes(psi.layout, std::move(good_part));
    }
    if (bad_sq > 0.0) {
        const double inv = 1.0 / std::sqrt(bad_sq);
        for (Complex& c : bad_part) c *= inv;
        out.bad = StateVector::from_amplitudes(psi.layout, std::move(bad_part));
    }
    return out;
}

StateVector general_diffusion_apply(const StateVector& psi_ref, const StateVector& phi) {
    return reflect_about(psi_ref, phi);
}

GroverIterate::GroverIterate(StateVector psi_ref) : prep_(std::move(psi_ref)) {
    if (prep_.target().layout.copies != 2) {
        throw ShapeError("iterate expects a two-copy register");
    }
}

void GroverIterate::apply_inplace(StateVector& v) const {
    if (!(v.layout == prep_.target().layout)) throw ShapeError("state layouts differ");
    // S_chi
    kernels::phase_flip_intersecting(v.amps.data(), v.layout.two_level_count,
                                     v.layout.d_levels);
    // A^{-1}
    prep_.inverse_inplace(v);
    // S0 = I - 2|0...0><0...0|
    v.amps[0] = -v.amps[0];
    // A, then the global minus sign
    prep_.forward_inplace(v);
    kernels::scale(Complex{-1.0, 0.0}, v.amps.data(), v.amps.size());
}

StateVector GroverIterate::apply(const StateVector& v) const {
    StateVector out = v;
    apply_inplace(out);
    return out;
}

StateVector apply_q(const StateVector& psi_ref, const StateVector& v) {
    return GroverIterate(psi_ref).apply(v);
}

double claim_equivalence_residual(const StateVector& psi_ref, const StateVector& phi) {
    if (!(psi_ref.layout == phi.layout)) throw ShapeError("state layouts differ");
    const GoodBadDecomposition decomp = decompose_good_bad(psi_ref);
    StateVector projection = phi;
    for (Complex& c : projection.amps) c = Complex{0.0, 0.0};
    if (decomp.bad) {
        kernels::axpy(inner(*decomp.bad, phi), decomp.bad->amps.data(),
                      projection.amps.data(), projection.amps.size());
    }
    if (decomp.good) {
        kernels::axpy(inner(*decomp.good, phi), decomp.good->amps.data(),
                      projection.amps.data(), projection.amps.size());
    }
    if (l2_distance(phi, projection) >= kResidualTol) {
        throw PreconditionError("phi lies outside the good/bad span of the reference state");
    }

    const StateVector lhs = apply_q(psi_ref, phi);
    StateVector rhs = general_diffusion_apply(psi_ref, phase_oracle_apply(phi));
    kernels::scale(Complex{-1.0, 0.0}, rhs.amps.data(), rhs.amps.size());
    return l2_distance(lhs, rhs);
}

double analytic_success_prob(double a, long j) {
    if (j < 0) throw InputError("iteration count must be nonnegative");
    const double clamped = std::clamp(a, 0.0, 1.0);
    const double theta = std::asin(std::sqrt(clamped));
    const double s = std::sin(static_cast<double>(2 * j + 1) * theta);
    return s * s;
}

QSearchOutcome qsearch(const StateVector& psi_ref, const QSearchConfig& config) {
    const GroverIterate iterate(psi_ref);
    Rng rng(config.seed);
    const double m_cap = std::sqrt(static_cast<double>(psi_ref.dimension()));
    std::optional<BasisLabel> found_label;
    auto trial = [&](long j, Rng& r) {
        // Fresh preparation from the classical description — the same cheat
        // as the diffusion pseudo-gate.
        StateVector v = psi_ref;
        for (long k = 0; k < j; ++k) iterate.apply_inplace(v);
        BasisLabel label = measure_sample(v, r);
        if (predicate_eval(label)) {
            found_label = std::move(label);
            return true;
        }
        return false;
    };
    const ScheduleCounts counts = run_schedule(config, m_cap, rng, trial);
    QSearchOutcome out;
    out.found = std::move(found_label);
    out.q_applications = counts.q_applications;
    out.preparations = counts.preparations;
    return out;
}

AnalyticSearchOutcome qsearch_analytic(double a, const QSearchConfig& config, double m_cap) {
    if (a < 0.0 || a > 1.0) throw InputError("success probability must lie in [0, 1]");
    Rng rng(config.seed);
    auto trial = [&](long j, Rng& r) { return r.uniform() < analytic_success_prob(a, j); };
    const ScheduleCounts counts = run_schedule(config, m_cap, rng, trial);
    return AnalyticSearchOutcome{counts.found, counts.q_applications, counts.preparations};
}

}  // namespace gdsim
