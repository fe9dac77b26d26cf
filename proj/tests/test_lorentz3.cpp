#include <cmath>
#include <random>

#include "doctest.h"
#include "lw3/lorentz3.hpp"

using namespace lw3;

namespace {

LVec3 random_vec(std::mt19937_64& rng, double box = 2.0) {
    std::uniform_real_distribution<double> d(-box, box);
    return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("inner product") {
    CHECK(inner({0, 0, 1}, {0, 0, 1}) == doctest::Approx(-1.0));
    CHECK(inner({1, 0, 0}, {0, 1, 0}) == doctest::Approx(0.0));
    CHECK(inner({1, 1, 1}, {2, 0, 1}) == doctest::Approx(1.0));
}

TEST_CASE("lorentzian cross product") {
    const LVec3 c = cross_l({1, 0, 0}, {0, 1, 0});
    CHECK(c.x1 == 0.0);
    CHECK(c.x2 == 0.0);
    CHECK(c.x3 == doctest::Approx(-1.0));

    std::mt19937_64 rng(23u);
    for (int k = 0; k < 100; ++k) {
        const LVec3 u = random_vec(rng), v = random_vec(rng), w = random_vec(rng);
        // <u x v, w> = det[u; v; w]
        const double lhs = inner(cross_l(u, v), w);
        const double det = u.x1 * (v.x2 * w.x3 - v.x3 * w.x2) -
                           u.x2 * (v.x1 * w.x3 - v.x3 * w.x1) +
                           u.x3 * (v.x1 * w.x2 - v.x2 * w.x1);
        CHECK(lhs == doctest::Approx(det).epsilon(1e-12));
        CHECK(euclid_norm(cross_l(u, u)) == doctest::Approx(0.0));
        CHECK(std::fabs(inner(cross_l(u, v), u)) <= 1e-12 * (1.0 + euclid_norm(u)));
    }
}

TEST_CASE("causal character") {
    CHECK(causal_character({0, 0, 1}) == CausalCharacter::timelike);
    CHECK(causal_character({1, 0, 1}) == CausalCharacter::lightlike);
    CHECK(causal_character({2, 1, 1}) == CausalCharacter::spacelike);
}

TEST_CASE("stereographic projection examples and poles") {
    const EpsScalar z0 = stereo_project({0, 0, -1}, Eps::spacelike);
    CHECK(mag(z0) == doctest::Approx(0.0));

    const EpsScalar z1 = stereo_project({1, 0, 0}, Eps::timelike);
    CHECK(mag(z1) == doctest::Approx(0.0));

    CHECK_THROWS_AS(void(stereo_project({0, 0, 1}, Eps::spacelike)), PoleError);
    CHECK_THROWS_AS(void(stereo_project({-1, 0, 0}, Eps::timelike)), PoleError);
    CHECK_THROWS_AS(void(stereo_project({5, 5, 5}, Eps::spacelike)), ContractViolation);

    const LVec3 p0 = stereo_unproject(zero(Eps::spacelike));
    CHECK(p0.x3 == doctest::Approx(-1.0));
    const LVec3 p1 = stereo_unproject(zero(Eps::timelike));
    CHECK(p1.x1 == doctest::Approx(1.0));
}

TEST_CASE("stereographic round trips stay on the hyperboloid") {
    std::mt19937_64 rng(29u);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    int done = 0;
    while (done < 500) {
        for (Eps eps : {Eps::spacelike, Eps::timelike}) {
            const EpsScalar z = scalar(d(rng), d(rng), eps);
            const double q = squared_norm(z);
            if (eps == Eps::spacelike && std::fabs(q - 1.0) < 0.05) continue;
            if (eps == Eps::timelike && std::fabs(q + 1.0) < 0.05) continue;
            const LVec3 p = stereo_unproject(z);
            CHECK(inner(p, p) == doctest::Approx(-sign(eps)).epsilon(1e-12));
            const EpsScalar back = stereo_project(p, eps);
            CHECK(mag(back - z) <= 1e-12 * (1.0 + mag(z)));
        }
        ++done;
    }
}

TEST_CASE("ck sk kit") {
    for (int k : {-1, 0, 1}) {
        const auto [c, s] = ck_sk(0.0, k, Eps::spacelike);
        CHECK(c == doctest::Approx(1.0));
        CHECK(s == doctest::Approx(0.0));
    }
    const auto h = ck_sk(0.8, 1, Eps::spacelike);
    CHECK(h.c == doctest::Approx(std::cosh(0.8)));
    CHECK(h.s == doctest::Approx(std::sinh(0.8)));
    CHECK(h.c * h.c - h.s * h.s == doctest::Approx(1.0).epsilon(1e-14));

    const auto p = ck_sk(2.0, 0, Eps::timelike);
    CHECK(p.c == doctest::Approx(1.0));
    CHECK(p.s == doctest::Approx(2.0));

    // c_k(2t) = c_k^2 + k s_k^2 and s_k(2t) = 2 s_k c_k
    for (int k : {-1, 0, 1}) {
        for (Eps eps : {Eps::spacelike, Eps::timelike}) {
            const auto one_arg = ck_sk(0.37, k, eps);
            const auto two_arg = ck_sk(0.74, k, eps);
            CHECK(two_arg.c ==
                  doctest::Approx(one_arg.c * one_arg.c + k * one_arg.s * one_arg.s).epsilon(1e-14));
            CHECK(two_arg.s == doctest::Approx(2.0 * one_arg.s * one_arg.c).epsilon(1e-14));
        }
    }
}

TEST_CASE("canonical rotations") {
    const LMat3 id = canonical_rotation(RotationKind::elliptic, 0.0);
    CHECK(max_abs_diff(id, LMat3::identity()) == doctest::Approx(0.0));

    const LMat3 h = canonical_rotation(RotationKind::hyperbolic, 1.0);
    CHECK(h.at(1, 1) == doctest::Approx(std::cosh(1.0)));
    CHECK(h.at(1, 2) == doctest::Approx(std::sinh(1.0)));
    CHECK(h.at(0, 0) == doctest::Approx(1.0));

    const LMat3 p = canonical_rotation(RotationKind::parabolic, 0.5);
    CHECK(p.at(1, 2) == doctest::Approx(0.125));
    CHECK(is_pseudo_orthogonal(p, 1e-14));
    CHECK(classify_lorentz(p) == LorentzComponent::proper_orthochronous);
    // parabolic fixes the lightlike direction (0, 1, 1)
    const LVec3 fixed = p * LVec3{0, 1, 1};
    CHECK(euclid_norm(fixed - LVec3{0, 1, 1}) <= 1e-14);

    // one-parameter group law
    for (RotationKind kind : {RotationKind::hyperbolic, RotationKind::elliptic}) {
        const LMat3 lhs = canonical_rotation(kind, 0.4) * canonical_rotation(kind, 0.9);
        const LMat3 rhs = canonical_rotation(kind, 1.3);
        CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
    }

    // hyperboloid preserved
    std::mt19937_64 rng(31u);
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    for (int k = 0; k < 200; ++k) {
        const Eps eps = k % 2 == 0 ? Eps::spacelike : Eps::timelike;
        const EpsScalar z = scalar(d(rng), d(rng), eps);
        const double q = squared_norm(z);
        if (eps == Eps::spacelike && std::fabs(q - 1.0) < 0.05) continue;
        if (eps == Eps::timelike && std::fabs(q + 1.0) < 0.05) continue;
        const LVec3 p0 = stereo_unproject(z);
        for (RotationKind kind :
             {RotationKind::hyperbolic, RotationKind::elliptic, RotationKind::parabolic}) {
            const LVec3 p1 = canonical_rotation(kind, 0.7) * p0;
            CHECK(inner(p1, p1) == doctest::Approx(inner(p0, p0)).epsilon(1e-12));
        }
    }
}

TEST_CASE("lorentz classification") {
    CHECK(classify_lorentz(LMat3::identity()) == LorentzComponent::proper_orthochronous);

    LMat3 pm;
    pm.at(0, 0) = 1.0;
    pm.at(1, 1) = -1.0;
    pm.at(2, 2) = -1.0;
    CHECK(classify_lorentz(pm) == LorentzComponent::proper_antichronous);

    LMat3 mp;
    mp.at(0, 0) = -1.0;
    mp.at(1, 1) = 1.0;
    mp.at(2, 2) = 1.0;
    CHECK(classify_lorentz(mp) == LorentzComponent::improper_orthochronous);

    LMat3 junk;
    for (std::size_t k = 0; k < 9; ++k) junk.m[k] = 0.1 * static_cast<double>(k + 1);
    CHECK(classify_lorentz(junk) == LorentzComponent::not_pseudo_orthogonal);
}
