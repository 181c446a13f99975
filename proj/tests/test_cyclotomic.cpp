#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>
#include <vector>

#include "mw/cyclotomic.hpp"

using namespace mw;

namespace {

CycInt from_raw(const CycloContextPtr& ctx, std::vector<long> raw) {
    return canonicalize(ctx, raw);
}

Scalar integer_scalar(const RootSpec& spec, long v, int half_power) {
    return Scalar(spec.from_int(v), half_power);
}

}  // namespace

TEST_CASE("canonicalize reduces modulo the 2N-th cyclotomic polynomial") {
    SECTION("N=2: zeta_4^2 = -1") {
        RootSpec spec(2);
        CycInt z2 = from_raw(spec.context(), {0, 0, 1, 0});
        CHECK(z2 == spec.from_int(-1));
    }
    SECTION("N=1: zeta_2 = -1") {
        RootSpec spec(1);
        CycInt z = from_raw(spec.context(), {0, 1});
        CHECK(z == spec.from_int(-1));
    }
    SECTION("N=3: zeta_6^2 = zeta_6 - 1") {
        // oracle: long division by Phi_6(x) = x^2 - x + 1
        RootSpec spec(3);
        CycInt z2 = from_raw(spec.context(), {0, 0, 1, 0, 0, 0});
        CycInt expected = from_raw(spec.context(), {-1, 1});
        CHECK(z2 == expected);
    }
}

TEST_CASE("ring arithmetic") {
    SECTION("add(zeta, -zeta) = 0") {
        for (int n : {1, 2, 3, 4, 5}) {
            RootSpec spec(n);
            CycInt z = spec.zeta_pow(1);
            CHECK((z + (-z)).is_zero());
        }
    }
    SECTION("N=2: i*i = -1") {
        RootSpec spec(2);
        CHECK(spec.zeta_pow(1) * spec.zeta_pow(1) == spec.from_int(-1));
    }
    SECTION("N=3: zeta_6 * zeta_6 = zeta_6 - 1") {
        RootSpec spec(3);
        CHECK(spec.zeta_pow(1) * spec.zeta_pow(1) == from_raw(spec.context(), {-1, 1}));
    }
    SECTION("ring axioms on random triples") {
        std::mt19937 rng(20240811);
        for (int n = 1; n <= 8; ++n) {
            RootSpec spec(n);
            const int deg = spec.context()->degree();
            auto random_elt = [&]() {
                std::vector<long> raw(static_cast<std::size_t>(2 * n));
                std::uniform_int_distribution<long> dist(-9, 9);
                for (auto& v : raw) v = dist(rng);
                return from_raw(spec.context(), raw);
            };
            for (int iter = 0; iter < 125; ++iter) {
                CycInt a = random_elt(), b = random_elt(), c = random_elt();
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a * b == b * a);
            }
            REQUIRE(deg >= 1);
        }
    }
}

TEST_CASE("root_power") {
    SECTION("k=0 gives 1") {
        for (int n : {1, 2, 3, 4, 5, 6}) {
            RootSpec spec(n);
            CHECK(spec.omega_pow(0) == spec.one());
            CHECK(spec.sqrt_omega_pow(0) == spec.one());
        }
    }
    SECTION("N=2, a=1: omega = -1") {
        RootSpec spec(2, 1);
        CHECK(spec.omega_pow(1) == spec.from_int(-1));
    }
    SECTION("N=4, a=1: omega = canonical form of zeta_8^2") {
        RootSpec spec(4, 1);
        CHECK(spec.omega_pow(1) == from_raw(spec.context(), {0, 0, 1, 0}));
    }
    SECTION("sqrt squares to omega") {
        for (int n = 1; n <= 8; ++n)
            for (int a = 1; a <= n; ++a) {
                if (std::gcd(a, n) != 1) continue;
                for (bool neg : {false, true}) {
                    RootSpec spec(n, a, neg);
                    CHECK(spec.sqrt_omega_pow(1) * spec.sqrt_omega_pow(1) == spec.omega_pow(1));
                }
            }
    }
}

TEST_CASE("phi") {
    SECTION("Phi(0) = 1") {
        for (int n : {1, 2, 3, 5, 8}) CHECK(RootSpec(n).phi(0) == RootSpec(n).one());
    }
    SECTION("N=2, a=1: Phi(1) = i^3 = -i") {
        RootSpec spec(2, 1);
        CHECK(spec.phi(1) == from_raw(spec.context(), {0, -1}));
    }
    SECTION("N=2: Phi(1)^2 = omega") {
        RootSpec spec(2, 1);
        CHECK(spec.phi(1) * spec.phi(1) == spec.omega_pow(1));
    }
    SECTION("properties of Phi for all N <= 8, all powers, both square roots") {
        for (int n = 1; n <= 8; ++n)
            for (int a = 1; a <= n; ++a) {
                if (std::gcd(a, n) != 1) continue;
                for (bool neg : {false, true}) {
                    RootSpec spec(n, a, neg);
                    for (int k = 0; k < n; ++k) {
                        CHECK(spec.phi(k) * spec.phi(k) ==
                              spec.omega_pow(static_cast<long long>(k) * k));
                        CHECK(spec.phi(-k) == spec.phi(k));
                        CHECK(spec.phi(k + n) == spec.phi(k));
                        CHECK(spec.phi(k) * spec.phi_bar(k) == spec.one());
                        for (int l = 0; l < n; ++l)
                            CHECK(spec.phi(k + l) ==
                                  spec.phi(k) * spec.phi(l) *
                                      spec.omega_pow(static_cast<long long>(k) * l));
                    }
                }
            }
    }
}

TEST_CASE("scalar equality") {
    SECTION("zero equals zero at any exponent") {
        RootSpec spec(3);
        CHECK(scalar_eq(integer_scalar(spec, 0, 3), integer_scalar(spec, 0, 0)));
    }
    SECTION("N=3: 3 * 3^(-2/2) = 1") {
        RootSpec spec(3);
        CHECK(scalar_eq(integer_scalar(spec, 3, 2), integer_scalar(spec, 1, 0)));
    }
    SECTION("N=3: parity rule") {
        RootSpec spec(3);
        CHECK_FALSE(scalar_eq(integer_scalar(spec, 1, 1), integer_scalar(spec, 1, 0)));
    }
    SECTION("N=1 ignores the exponent") {
        RootSpec spec(1);
        CHECK(scalar_eq(integer_scalar(spec, 1, 5), integer_scalar(spec, 1, 0)));
    }
}

TEST_CASE("scalar arithmetic") {
    RootSpec spec(3);
    SECTION("half-power absorption") {
        Scalar s = integer_scalar(spec, 1, 0).times_half_power(5);
        // 3^(5/2) = 27 * 3^(-1/2)
        CHECK(s.half_power() == 1);
        CHECK(s.cyc() == spec.from_int(27));
        Scalar t = integer_scalar(spec, 1, 3).times_half_power(-2);
        CHECK(t.half_power() == 5);
    }
    SECTION("addition aligns exponents") {
        Scalar a = integer_scalar(spec, 1, 0);
        Scalar b = integer_scalar(spec, 1, 2);
        Scalar sum = a + b;          // 1 + 1/3 = 4/3 at e = 2
        CHECK(sum.half_power() == 2);
        CHECK(sum.cyc() == spec.from_int(4));
        CHECK_THROWS_AS(a + integer_scalar(spec, 1, 1), std::logic_error);
    }
    SECTION("reduced strips exponent content") {
        Scalar s = integer_scalar(spec, 9, 4).reduced();
        CHECK(s.half_power() == 0);
        CHECK(s.cyc() == spec.from_int(1));
    }
}

TEST_CASE("complex approximation") {
    SECTION("Scalar(1, 0) -> 1.0") {
        RootSpec spec(5);
        auto z = to_complex(integer_scalar(spec, 1, 0));
        CHECK(std::abs(z - std::complex<double>(1.0, 0.0)) < 1e-12);
    }
    SECTION("N=3: (1 + 2*omega) * 3^(-1/2) = i") {
        RootSpec spec(3);
        Scalar s(spec.from_int(1) + spec.omega_pow(1).times_int(2), 1);
        auto z = to_complex(s);
        CHECK(std::abs(z - std::complex<double>(0.0, 1.0)) < 1e-12);
    }
    SECTION("N=2: Scalar(-1, 0) -> -1.0") {
        RootSpec spec(2);
        auto z = to_complex(integer_scalar(spec, -1, 0));
        CHECK(std::abs(z - std::complex<double>(-1.0, 0.0)) < 1e-12);
    }
    SECTION("approximation of a product is the product of approximations") {
        std::mt19937 rng(7);
        for (int n : {2, 3, 5, 6}) {
            RootSpec spec(n);
            std::uniform_int_distribution<long> dist(-4, 4);
            for (int iter = 0; iter < 20; ++iter) {
                std::vector<long> ra(static_cast<std::size_t>(2 * n)), rb(ra);
                for (auto& v : ra) v = dist(rng);
                for (auto& v : rb) v = dist(rng);
                Scalar a(canonicalize(spec.context(), ra), 1);
                Scalar b(canonicalize(spec.context(), rb), 2);
                auto lhs = to_complex(a * b);
                auto rhs = to_complex(a) * to_complex(b);
                CHECK(std::abs(lhs - rhs) < 1e-10);
            }
        }
    }
}

TEST_CASE("rendering format") {
    RootSpec spec(3);
    Scalar s(spec.from_int(-1) + spec.zeta_pow(1).times_int(2), 1);
    CHECK(render_exact(s) == "(-1 + 2*z) * 3^(-1/2), z = zeta_6");
    CHECK(render_exact(Scalar::zero(spec.context())) == "(0) * 3^(-0/2), z = zeta_6");
}

TEST_CASE("root spec validation") {
    CHECK_THROWS_AS(RootSpec(4, 2), input_error);
    CHECK_THROWS_AS(RootSpec(0), input_error);
    CHECK_NOTHROW(RootSpec(1, 7));
}
