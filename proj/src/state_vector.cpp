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

#include "gdsim/state_vector.hpp"

#include <cmath>
#include <cstdio>

#include "gdsim/kernels.hpp"

namespace gdsim {

namespace {

void require_same_layout(const StateVector& a, const StateVector& b) {
    if (!(a.layout == b.layout)) throw ShapeError("state layouts differ");
}

void require_finite(const std::vector<Complex>& amps) {
    for (const Complex& c : amps) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw InputError("amplitude is not finite");
        }
    }
}

}  // namespace

StateVector StateVector::zero_state(const RegisterLayout& layout) {
    return basis_state(layout, 0);
}

StateVector StateVector::basis_state(const RegisterLayout& layout, std::uint64_t flat) {
    layout.validate();
    if (flat >= layout.dimension()) throw ShapeError("basis index out of range");
    StateVector v;
    v.layout = layout;
    v.amps.assign(layout.dimension(), Complex{0.0, 0.0});
    v.amps[flat] = Complex{1.0, 0.0};
    return v;
}

StateVector StateVector::from_amplitudes(const RegisterLayout& layout, std::vector<Complex> amps) {
    layout.validate();
    if (amps.size() != layout.dimension()) throw ShapeError("amplitude count does not match layout");
    require_finite(amps);
    StateVector v;
    v.layout = layout;
    v.amps = std::move(amps);
    return v;
}

double StateVector::norm() const {
    return std::sqrt(kernels::norm_sq(amps.data(), amps.size()));
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(kernels::norm_sq(amps.data(), amps.size()) - 1.0) <= 3.0 * tol;
}

StateVector tensor(const StateVector& a, const StateVector& b, std::uint64_t max_amplitudes) {
    if (a.layout.two_level_count != b.layout.two_level_count ||
        a.layout.d_levels != b.layout.d_levels) {
        throw ShapeError("tensor factors must share the per-copy shape");
    }
    RegisterLayout layout = a.layout;
    layout.copies = a.layout.copies + b.layout.copies;
    layout.validate(max_amplitudes);  // throws CapacityError if the product is too large
    StateVector out;
    out.layout = layout;
    out.amps.resize(layout.dimension());
    kernels::tensor(a.amps.data(), a.amps.size(), b.amps.data(), b.amps.size(), out.amps.data());
    return out;
}

Complex inner(const StateVector& a, const StateVector& b) {
    require_same_layout(a, b);
    return kernels::inner(a.amps.data(), b.amps.data(), a.amps.size());
}

StateVector reflect_about(const StateVector& axis, const StateVector& v) {
    require_same_layout(axis, v);
    StateVector out = v;
    const Complex c = kernels::inner(axis.amps.data(), v.amps.data(), v.amps.size());
    kernels::axpy(-2.0 * c, axis.amps.data(), out.amps.data(), out.amps.size());
    return out;
}

double l2_distance(const StateVector& a, const StateVector& b) {
    require_same_layout(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.amps.size(); ++i) s += std::norm(a.amps[i] - b.amps[i]);
    return std::sqrt(s);
}

StateVector random_state(const RegisterLayout& layout, Rng& rng) {
    layout.validate();
    std::vector<Complex> amps(layout.dimension());
    for (Complex& c : amps) c = Complex{rng.normal(), rng.normal()};
    const double nrm = std::sqrt(kernels::serial::norm_sq(amps.data(), amps.size()));
    for (Complex& c : amps) c /= nrm;
    return StateVector::from_amplitudes(layout, std::move(amps));
}

StatePreparer::StatePreparer(StateVector target) : target_(std::move(target)) {
    if (!target_.is_normalized()) throw PreconditionError("preparer target must be normalized");
    const std::uint64_t dim = target_.dimension();
    head_ = target_.amps[0];

    // The residual target - s|0...0> zeroes index 0 exactly; nothing is
    // subtracted anywhere else, so no cancellation occurs.
    std::vector<Complex> residual = target_.amps;
    residual[0] = Complex{0.0, 0.0};
    const double r = std::sqrt(kernels::norm_sq(residual.data(), residual.size()));
    tail_norm_ = r;
    if (dim >= 2) {
        if (r > 0.0) {
            kernels::scale(Complex{1.0 / r, 0.0}, residual.data(), residual.size());
        } else {
            // Target parallel to |0...0>: any fixed unit vector orthogonal
            // to it completes the two-dimensional subspace.
            residual.assign(residual.size(), Complex{0.0, 0.0});
            residual[1] = Complex{1.0, 0.0};
        }
        residual_dir_ = StateVector::from_amplitudes(target_.layout, std::move(residual));
    }
}

void StatePreparer::apply(StateVector& v, bool inverse) const {
    const std::uint64_t dim = v.dimension();
    if (dim < 2) {
        // One-dimensional register: the operator is the phase s.
        v.amps[0] *= inverse ? std::conj(head_) : head_;
        return;
    }
    const Complex s = head_;
    const double r = tail_norm_;
    const Complex c0 = v.amps[0];
    const Complex cu =
        kernels::inner(residual_dir_.amps.data(), v.amps.data(), v.amps.size());
    Complex coef_e0, coef_u;
    if (!inverse) {
        // A e0 = s e0 + r u,  A u = -r e0 + conj(s) u.
        coef_e0 = c0 * (s - 1.0) + cu * (-r);
        coef_u = c0 * r + cu * (std::conj(s) - 1.0);
    } else {
        // A^dagger e0 = conj(s) e0 - r u,  A^dagger u = r e0 + s u.
        coef_e0 = c0 * (std::conj(s) - 1.0) + cu * r;
        coef_u = c0 * (-r) + cu * (s - 1.0);
    }
    v.amps[0] += coef_e0;
    kernels::axpy(coef_u, residual_dir_.amps.data(), v.amps.data(), v.amps.size());
}

void StatePreparer::forward_inplace(StateVector& v) const {
    require_same_layout(target_, v);
    apply(v, false);
}

void StatePreparer::inverse_inplace(StateVector& v) const {
    require_same_layout(target_, v);
    apply(v, true);
}

StateVector StatePreparer::forward(const StateVector& v) const {
    StateVector out = v;
    forward_inplace(out);
    return out;
}

StateVector StatePreparer::inverse(const StateVector& v) const {
    StateVector out = v;
    inverse_inplace(out);
    return out;
}

StateVector prepare_from_zero(const StateVector& target, const StateVector& v) {
    return StatePreparer(target).forward(v);
}

StateVector prepare_from_zero_inverse(const StateVector& target, const StateVector& v) {
    return StatePreparer(target).inverse(v);
}

BasisLabel measure_sample(const StateVector& v, Rng& rng) {
    const double u = rng.uniform();
    double cum = 0.0;
    std::uint64_t chosen = 0;
    bool have_support = false;
    for (std::uint64_t i = 0; i < v.dimension(); ++i) {
        const double p = std::norm(v.amps[i]);
        if (p > 0.0) {
            chosen = i;  // last index with support, the fallback when
                         // rounding leaves cum slightly below 1
            have_support = true;
            cum += p;
            if (u < cum) return label_of(v.layout, i);
        }
    }
    if (!have_support) throw PreconditionError("cannot sample from the zero vector");
    return label_of(v.layout, chosen);
}

std::string amplitude_digest(const StateVector& v) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xffull;
            h *= 1099511628211ull;
        }
    };
    for (const Complex& c : v.amps) {
        mix(static_cast<std::uint64_t>(std::llround(c.real() * 1e12)));
        mix(static_cast<std::uint64_t>(std::llround(c.imag() * 1e12)));
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace gdsim
