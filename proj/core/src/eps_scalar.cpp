#include "lw3/eps_scalar.hpp"

#include <complex>
#include <ostream>
#include <sstream>

namespace lw3 {

void check_same_eps(const EpsScalar& a, const EpsScalar& b) {
    if (a.eps != b.eps) {
        throw EpsMismatch("operands carry different eps tags (" +
                          std::string(to_string(a.eps)) + " vs " + to_string(b.eps) + ")");
    }
}

EpsScalar inverse(const EpsScalar& z, double tol_null) {
    const double zz = squared_norm(z);
    const double tol = tol_null < 0.0 ? default_null_tol(z) : tol_null;
    if (std::fabs(zz) <= tol) {
        throw NullDivisor("scalar on the null cone: |z zbar| = " + std::to_string(std::fabs(zz)));
    }
    return {z.re / zz, -z.im / zz, z.eps};
}

SplitPair split_iso(const EpsScalar& z) {
    if (z.eps != Eps::timelike) {
        throw ContractViolation("split_iso requires a Lorentz-number argument (eps = -1)");
    }
    return {z.re + z.im, z.re - z.im};
}

EpsScalar split_iso_inv(const SplitPair& p) {
    return {0.5 * (p.u + p.v), 0.5 * (p.u - p.v), Eps::timelike};
}

namespace {

std::complex<double> to_complex(const EpsScalar& z) { return {z.re, z.im}; }

EpsScalar from_complex(const std::complex<double>& w) {
    return {w.real(), w.imag(), Eps::spacelike};
}

using RealFn = double (*)(double);

EpsScalar split_apply(RealFn fn, const EpsScalar& z) {
    const SplitPair p = split_iso(z);
    return split_iso_inv({fn(p.u), fn(p.v)});
}

}  // namespace

EpsScalar elementary(ElemKind kind, const EpsScalar& z) {
    if (z.eps == Eps::spacelike) {
        const auto w = to_complex(z);
        switch (kind) {
            case ElemKind::exp: return from_complex(std::exp(w));
            case ElemKind::cosh: return from_complex(std::cosh(w));
            case ElemKind::sinh: return from_complex(std::sinh(w));
            case ElemKind::sin: return from_complex(std::sin(w));
            case ElemKind::cos: return from_complex(std::cos(w));
        }
    } else {
        switch (kind) {
            case ElemKind::exp: return split_apply(std::exp, z);
            case ElemKind::cosh: return split_apply(std::cosh, z);
            case ElemKind::sinh: return split_apply(std::sinh, z);
            case ElemKind::sin: return split_apply(std::sin, z);
            case ElemKind::cos: return split_apply(std::cos, z);
        }
    }
    throw ContractViolation("unknown elementary kind");
}

EpsScalar exp(const EpsScalar& z) { return elementary(ElemKind::exp, z); }
EpsScalar cosh(const EpsScalar& z) { return elementary(ElemKind::cosh, z); }
EpsScalar sinh(const EpsScalar& z) { return elementary(ElemKind::sinh, z); }
EpsScalar sin(const EpsScalar& z) { return elementary(ElemKind::sin, z); }
EpsScalar cos(const EpsScalar& z) { return elementary(ElemKind::cos, z); }

std::string to_string(const EpsScalar& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const EpsScalar& z) {
    const char unit = z.eps == Eps::spacelike ? 'i' : 't';
    os << '(' << z.re << (z.im < 0 ? " - " : " + ") << std::fabs(z.im) << unit << ')';
    return os;
}

}  // namespace lw3
