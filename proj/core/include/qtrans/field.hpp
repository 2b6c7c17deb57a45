#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qtrans {

using cdouble = std::complex<double>;

/// Complex amplitudes sampled on a uniform 1D grid (spatial or quadrature).
struct ComplexField1D {
    std::vector<cdouble> v;

    int size() const { return static_cast<int>(v.size()); }
    cdouble& operator[](int i) { return v[i]; }
    const cdouble& operator[](int i) const { return v[i]; }
};

/// Trapezoidal L2 norm^2, norm and inner product on step h.
double norm2(const ComplexField1D& f, double h);
double l2_norm(const ComplexField1D& f, double h);
cdouble inner(const ComplexField1D& bra, const ComplexField1D& ket, double h);
void normalize(ComplexField1D& f, double h);
double l2_distance(const ComplexField1D& a, const ComplexField1D& b, double h);

/// Joint amplitudes Psi(x, q), row-major in x (index ix*n_q + iq).
struct JointState2D {
    int n_x = 0;
    int n_q = 0;
    std::vector<cdouble> a;
    double t = 0.0;

    static JointState2D zeros(int n_x, int n_q);
    cdouble& at(int ix, int iq) { return a[static_cast<size_t>(ix) * n_q + iq]; }
    const cdouble& at(int ix, int iq) const { return a[static_cast<size_t>(ix) * n_q + iq]; }
    std::span<cdouble> row(int ix) { return {a.data() + static_cast<size_t>(ix) * n_q, static_cast<size_t>(n_q)}; }
    std::span<const cdouble> row(int ix) const { return {a.data() + static_cast<size_t>(ix) * n_q, static_cast<size_t>(n_q)}; }
};

double norm2(const JointState2D& s, double hx, double hq);
void normalize(JointState2D& s, double hx, double hq);

} // namespace qtrans
