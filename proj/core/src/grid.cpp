#include "qtrans/grid.hpp"

#include <cmath>
#include <string>

#include "qtrans/constants.hpp"
#include "qtrans/errors.hpp"
#include "qtrans/field.hpp"

namespace qtrans {

double PhysicalConstants::wavevector(double energy_ev) const {
    return std::sqrt(2.0 * m_star * energy_ev) / hbar;
}

double PhysicalConstants::velocity(double energy_ev) const {
    return std::sqrt(2.0 * energy_ev / m_star);
}

double PhysicalConstants::momentum(double energy_ev) const {
    return std::sqrt(2.0 * m_star * energy_ev);
}

void PhysicalConstants::validate() const {
    if (hbar <= 0 || m_star <= 0 || e_charge <= 0)
        throw ConfigError("physical constants must be strictly positive");
}

std::vector<double> SpatialGrid::nodes() const {
    std::vector<double> xs(n_x);
    for (int i = 0; i < n_x; ++i) xs[i] = x(i);
    return xs;
}

int SpatialGrid::nearest(double x_val) const {
    int i = static_cast<int>(std::lround((x_val - x_min) / dx()));
    if (i < 0) i = 0;
    if (i >= n_x) i = n_x - 1;
    return i;
}

void SpatialGrid::validate() const {
    if (n_x < 3) throw ConfigError("grid.n_x must be >= 3 (got " + std::to_string(n_x) + ")");
    if (!(x_max > x_min)) throw ConfigError("grid.x_max must exceed grid.x_min");
}

std::vector<double> QuadratureGrid::nodes() const {
    std::vector<double> qs(n_q);
    for (int i = 0; i < n_q; ++i) qs[i] = q(i);
    return qs;
}

QuadratureGrid QuadratureGrid::for_mode(double omega, double hbar, int n_q, double span_factor) {
    if (omega <= 0) throw ConfigError("photon mode frequency must be positive");
    QuadratureGrid g;
    g.q_max = span_factor * std::sqrt(hbar / omega);
    g.n_q = n_q;
    g.validate();
    return g;
}

void QuadratureGrid::validate() const {
    if (n_q < 3) throw ConfigError("photon.n_q must be >= 3");
    if (!(q_max > 0)) throw ConfigError("quadrature grid must have positive extent");
}

// --- field helpers -------------------------------------------------------

double norm2(const ComplexField1D& f, double h) {
    const int n = f.size();
    if (n == 0) return 0.0;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        s += w * std::norm(f.v[i]);
    }
    return s * h;
}

double l2_norm(const ComplexField1D& f, double h) { return std::sqrt(norm2(f, h)); }

cdouble inner(const ComplexField1D& bra, const ComplexField1D& ket, double h) {
    const int n = bra.size();
    cdouble s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        s += w * std::conj(bra.v[i]) * ket.v[i];
    }
    return s * h;
}

void normalize(ComplexField1D& f, double h) {
    const double nrm = l2_norm(f, h);
    if (nrm <= 0) return;
    for (auto& z : f.v) z /= nrm;
}

double l2_distance(const ComplexField1D& a, const ComplexField1D& b, double h) {
    const int n = a.size();
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        s += w * std::norm(a.v[i] - b.v[i]);
    }
    return std::sqrt(s * h);
}

JointState2D JointState2D::zeros(int n_x, int n_q) {
    JointState2D s;
    s.n_x = n_x;
    s.n_q = n_q;
    s.a.assign(static_cast<size_t>(n_x) * n_q, cdouble{0.0, 0.0});
    return s;
}

double norm2(const JointState2D& s, double hx, double hq) {
    double total = 0.0;
    for (int ix = 0; ix < s.n_x; ++ix) {
        const double wx = (ix == 0 || ix == s.n_x - 1) ? 0.5 : 1.0;
        double rowsum = 0.0;
        const cdouble* r = s.a.data() + static_cast<size_t>(ix) * s.n_q;
        for (int iq = 0; iq < s.n_q; ++iq) {
            const double wq = (iq == 0 || iq == s.n_q - 1) ? 0.5 : 1.0;
            rowsum += wq * std::norm(r[iq]);
        }
        total += wx * rowsum;
    }
    return total * hx * hq;
}

void normalize(JointState2D& s, double hx, double hq) {
    const double nrm = std::sqrt(norm2(s, hx, hq));
    if (nrm <= 0) return;
    for (auto& z : s.a) z /= nrm;
}

} // namespace qtrans
