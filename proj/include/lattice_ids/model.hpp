#pragma once

// Lattice geometry of the box Lambda_L, the decaying envelope a_n, the
// heavy-tailed single-site distribution, and the normalization beta_L.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace lids {

inline double ipow(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Model parameters: dimension d, box radius L, envelope exponent alpha,
// tail exponent delta.
struct ModelParams {
    int d = 1;
    int L = 0;
    double alpha = 1.0;
    double delta = 2.0;

    void validate() const {
        if (d < 1) throw std::invalid_argument("ModelParams: d must be >= 1");
        if (L < 0) throw std::invalid_argument("ModelParams: L must be >= 0");
        if (!(alpha > 0.0)) throw std::invalid_argument("ModelParams: alpha must be > 0");
        if (!(delta > 1.0)) throw std::invalid_argument("ModelParams: delta must be > 1");
        if (volume_real() > 2147483646.0)
            throw std::invalid_argument("ModelParams: box volume exceeds matrix index range");
    }

    // (2L+1)^d without overflow concerns; exact for any desk-scale box.
    double volume_real() const { return ipow(2.0 * L + 1.0, d); }
    long long volume() const { return static_cast<long long>(volume_real() + 0.5); }

    // beta_L diverges iff d - alpha*(delta-1) > 0.
    bool hypothesis_ok() const { return d - alpha * (delta - 1.0) > 0.0; }

    // Regime of the pointwise (single-realization) statements.
    bool theorem2_regime() const {
        return d >= 2 && alpha > 0.0 && alpha < 0.5 && delta > 1.0 && delta < 1.0 / (2.0 * alpha);
    }

    ModelParams with_L(int newL) const {
        ModelParams p = *this;
        p.L = newL;
        return p;
    }

    bool operator==(const ModelParams&) const = default;
};

inline void to_json(nlohmann::json& j, const ModelParams& p) {
    j = nlohmann::json{{"d", p.d}, {"L", p.L}, {"alpha", p.alpha}, {"delta", p.delta}};
}

inline void from_json(const nlohmann::json& j, ModelParams& p) {
    j.at("d").get_to(p.d);
    j.at("L").get_to(p.L);
    j.at("alpha").get_to(p.alpha);
    j.at("delta").get_to(p.delta);
}

// Bijective map between flat indices 0..(2L+1)^d-1 and coordinate tuples
// (n_1,...,n_d) with |n_i| <= L.  The last coordinate varies fastest, so
// nearest neighbors along it are adjacent in index.
struct LatticeBox {
    int d;
    int L;
    int side;
    long long vol;

    LatticeBox(int d_, int L_) : d(d_), L(L_), side(2 * L_ + 1) {
        double v = ipow(static_cast<double>(side), d);
        if (v > 2147483646.0) throw std::invalid_argument("LatticeBox: volume exceeds index range");
        vol = static_cast<long long>(v + 0.5);
    }

    explicit LatticeBox(const ModelParams& p) : LatticeBox(p.d, p.L) {}

    long long index(const std::vector<int>& coords) const {
        long long idx = 0;
        for (int k = 0; k < d; ++k) {
            if (coords[k] < -L || coords[k] > L)
                throw std::out_of_range("LatticeBox: coordinate outside box");
            idx = idx * side + (coords[k] + L);
        }
        return idx;
    }

    std::vector<int> coords(long long idx) const {
        if (idx < 0 || idx >= vol) throw std::out_of_range("LatticeBox: index outside box");
        std::vector<int> c(d);
        for (int k = d - 1; k >= 0; --k) {
            c[k] = static_cast<int>(idx % side) - L;
            idx /= side;
        }
        return c;
    }

    static int sup_norm(const std::vector<int>& coords) {
        int m = 0;
        for (int c : coords) m = std::max(m, std::abs(c));
        return m;
    }
};

// Envelope a_n = max(1, ||n||_inf)^(-alpha); equals 1 on ||n||_inf <= 1.
inline double envelope(const std::vector<int>& coords, double alpha) {
    int r = LatticeBox::sup_norm(coords);
    return r <= 1 ? 1.0 : std::pow(static_cast<double>(r), -alpha);
}

inline double envelope_at_radius(int r, double alpha) {
    return r <= 1 ? 1.0 : std::pow(static_cast<double>(r), -alpha);
}

// Number of sites with ||n||_inf == r.
inline double shell_count(int r, int d) {
    if (r == 0) return 1.0;
    return ipow(2.0 * r + 1.0, d) - ipow(2.0 * r - 1.0, d);
}

// beta_L = sum over the box of a_n^(delta-1), evaluated shell by shell.
inline double beta_L(const ModelParams& p) {
    p.validate();
    double sum = 1.0;  // origin, a_0 = 1
    for (int r = 1; r <= p.L; ++r)
        sum += shell_count(r, p.d) * std::pow(envelope_at_radius(r, p.alpha), p.delta - 1.0);
    return sum;
}

// Single-site distribution: density (delta-1)/2 * |x|^(-delta) on |x| >= 1,
// zero inside (-1,1).  The CDF is flat at 1/2 on (-1,1); the quantile at
// u = 1/2 is fixed to -1.
struct HeavyTailDist {
    double delta;

    explicit HeavyTailDist(double delta_) : delta(delta_) {
        if (!(delta > 1.0)) throw std::invalid_argument("HeavyTailDist: delta must be > 1");
    }

    double rho(double x) const {
        double ax = std::abs(x);
        if (ax < 1.0) return 0.0;
        return 0.5 * (delta - 1.0) * std::pow(ax, -delta);
    }

    double cdf(double x) const {
        if (x <= -1.0) return 0.5 * std::pow(-x, 1.0 - delta);
        if (x >= 1.0) return 1.0 - 0.5 * std::pow(x, 1.0 - delta);
        return 0.5;
    }

    double quantile(double u) const {
        if (!(u > 0.0 && u < 1.0))
            throw std::domain_error("HeavyTailDist::quantile: u must lie in (0,1)");
        if (u <= 0.5) return -std::pow(2.0 * u, -1.0 / (delta - 1.0));
        return std::pow(2.0 * (1.0 - u), -1.0 / (delta - 1.0));
    }

    // Mass of the lower tail (-inf, -t] for t > 0; equals the upper tail
    // [t, inf) by symmetry.
    double tail_mass(double t) const {
        if (t <= 1.0) return 0.5;
        return 0.5 * std::pow(t, 1.0 - delta);
    }

    // Mass of an interval (lo, hi); endpoint inclusion is a null event.
    double interval_mass(double lo, double hi) const {
        if (hi <= lo) return 0.0;
        return cdf(hi) - cdf(lo);
    }
};

}  // namespace lids
