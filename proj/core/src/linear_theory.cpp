#include "couette3d/linear_theory.hpp"

#include <cmath>
#include <stdexcept>

namespace couette {

namespace {

double norm2_at(int k, double eta, int l, double t) {
    const double m = eta - k * t;
    return double(k) * k + m * m + double(l) * l;
}

// exact integral of |k, eta - k tau, l|^2 over [a, b]
double visc_integral(int k, double eta, int l, double a, double b) {
    if (k == 0) return (eta * eta + double(l) * l) * (b - a);
    const double ra = eta - k * a, rb = eta - k * b;
    return (double(k) * k + double(l) * l) * (b - a) + (ra * ra * ra - rb * rb * rb) / (3.0 * k);
}

using Vec3 = std::array<Complex, 3>;

Vec3 axpy(const Vec3& a, double h, const Vec3& b) {
    return {a[0] + h * b[0], a[1] + h * b[1], a[2] + h * b[2]};
}

Vec3 scale(const Vec3& a, double s) { return {s * a[0], s * a[1], s * a[2]}; }

// non-viscous tendency: lift-up plus linear pressure
Vec3 rhs_core(const Vec3& u, int k, double eta, int l, double t) {
    Vec3 d{-u[1], 0.0, 0.0};
    const double n2 = norm2_at(k, eta, l, t);
    if (n2 > 0.0 && k != 0) {
        const Complex p = 2.0 * Complex{0.0, 1.0} * double(k) * u[1] / n2;
        const Complex i{0.0, 1.0};
        d[0] -= i * double(k) * p;
        d[1] -= i * (eta - k * t) * p;
        d[2] -= i * double(l) * p;
    }
    return d;
}

void project(Vec3& u, int k, double eta, int l, double t) {
    const double n2 = norm2_at(k, eta, l, t);
    if (n2 == 0.0) return;
    const double m = eta - k * t;
    const Complex dot = double(k) * u[0] + m * u[1] + double(l) * u[2];
    const Complex a = dot / n2;
    u[0] -= double(k) * a;
    u[1] -= m * a;
    u[2] -= double(l) * a;
}

}  // namespace

double LinearMode::div_residual(double t) const {
    const double m = eta - k * t;
    const Complex d = double(k) * uhat[0] + m * uhat[1] + double(l) * uhat[2];
    double amp = 0.0;
    for (const auto& c : uhat) amp = std::max(amp, std::abs(c));
    if (amp == 0.0) return 0.0;
    return std::abs(d) / (amp * std::max(1.0, std::sqrt(norm2_at(k, eta, l, t))));
}

Complex q2_closed_form(int k, double eta, int l, Complex q2_init, double t, double nu) {
    if (nu == 0.0) return q2_init;
    return q2_init * std::exp(-nu * visc_integral(k, eta, l, 0.0, t));
}

Complex u2_from_q2(int k, double eta, int l, double t, Complex q2) {
    const double n2 = norm2_at(k, eta, l, t);
    if (n2 == 0.0) throw std::invalid_argument("u2_from_q2: zero shear wavevector");
    return -q2 / n2;
}

Complex q2_of(const LinearMode& m, double t) {
    return -norm2_at(m.k, m.eta, m.l, t) * m.uhat[1];
}

LinearMode evolve_linear_mode(const LinearMode& mode, double t0, double t1, double dt) {
    if (t1 < t0 || t0 < 0.0) throw std::invalid_argument("evolve_linear_mode: need 0 <= t0 <= t1");
    if (mode.div_residual(t0) > 1e-9)
        throw std::invalid_argument("evolve_linear_mode: input mode is not divergence-free");
    if (dt <= 0.0) dt = std::min(0.01, 0.1 / (1.0 + std::abs(mode.eta)));

    const int k = mode.k;
    const double eta = mode.eta;
    const int l = mode.l;
    const double nu = mode.nu;

    LinearMode out = mode;
    Vec3 u = mode.uhat;
    double t = t0;
    const long nsteps = std::max(1L, long(std::ceil((t1 - t0) / dt - 1e-12)));
    const double h = (t1 - t0) / double(nsteps);
    for (long i = 0; i < nsteps; ++i) {
        const double ehalf = std::exp(-nu * visc_integral(k, eta, l, t, t + 0.5 * h));
        const double e2 = std::exp(-nu * visc_integral(k, eta, l, t + 0.5 * h, t + h));
        const double efull = ehalf * e2;

        const Vec3 g1 = rhs_core(u, k, eta, l, t);
        const Vec3 u2s = scale(axpy(u, 0.5 * h, g1), ehalf);
        const Vec3 g2 = rhs_core(u2s, k, eta, l, t + 0.5 * h);
        const Vec3 u3s = axpy(scale(u, ehalf), 0.5 * h, g2);
        const Vec3 g3 = rhs_core(u3s, k, eta, l, t + 0.5 * h);
        const Vec3 u4s = axpy(scale(u, efull), h, scale(g3, e2));
        const Vec3 g4 = rhs_core(u4s, k, eta, l, t + h);

        Vec3 next = scale(u, efull);
        next = axpy(next, h / 6.0, scale(g1, efull));
        next = axpy(next, h / 3.0, scale(g2, e2));
        next = axpy(next, h / 3.0, scale(g3, e2));
        next = axpy(next, h / 6.0, g4);
        u = next;
        t += h;
    }
    project(u, k, eta, l, t1);
    out.uhat = u;
    return out;
}

double damping_envelope(int component, double t, double nu, double c) {
    if (component < 1 || component > 3)
        throw std::invalid_argument("damping_envelope: component must be 1, 2 or 3");
    if (!(c > 0.0 && c <= 1.0 / 3.0))
        throw std::invalid_argument("damping_envelope: c must lie in (0, 1/3]");
    if (!(t >= 1.0)) throw std::invalid_argument("damping_envelope: t must be >= 1");
    const double env = std::exp(-c * nu * t * t * t);
    return component == 2 ? env / (1.0 + t * t) : env;
}

}  // namespace couette
