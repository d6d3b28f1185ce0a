#include <doctest.h>

#include <random>

#include "dkdv/laurent.hpp"
#include "dkdv/numtheory.hpp"
#include "dkdv/projective.hpp"
#include "dkdv/sampling.hpp"
#include "dkdv/zp.hpp"

using dkdv::EntrySignature;
using dkdv::LaurentQ;
using dkdv::Projective;
using dkdv::Rational;
using dkdv::Zp;

namespace {

LaurentQ random_series(dkdv::Sampler& sampler, long width = 8) {
    long val = sampler.integer(-5, 5);
    auto s = LaurentQ::monomial(sampler.generic(), val, val + width);
    for (long e = val + 1; e < val + width; ++e) {
        if (sampler.integer(0, 2) == 0) continue;
        s = s + LaurentQ::monomial(sampler.generic(), e, val + width);
    }
    return s;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(3, 6) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).den() == 2);  // denominator always positive
    CHECK(Rational::parse("-7/3").str() == "-7/3");
    CHECK(Rational::parse("5").str() == "5");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
}

TEST_CASE("projective conventions") {
    Projective one(Rational(1)), zero(Rational(0));
    Projective inf = Projective::infinity();

    CHECK(one / zero == inf);
    CHECK((inf - inf).is_indeterminate());
    CHECK(Projective(Rational(1, 2)) + Projective(Rational(1, 3)) == Projective(Rational(5, 6)));

    CHECK(one / inf == zero);
    CHECK(one + inf == inf);
    CHECK(one - inf == inf);
    CHECK((Projective(Rational(2)) * inf) == inf);
    CHECK((zero * inf).is_indeterminate());
    CHECK((zero / zero).is_indeterminate());
    CHECK((inf / inf).is_indeterminate());
    CHECK(inf / zero == inf);
    CHECK((inf + inf).is_indeterminate());  // unsigned infinity: same form as inf - inf

    // Indeterminate absorbs everything.
    Projective ind = Projective::indeterminate();
    CHECK((ind + one).is_indeterminate());
    CHECK((inf * ind).is_indeterminate());
    CHECK((ind / ind).is_indeterminate());
}

TEST_CASE("projective arithmetic restricted to finite values satisfies field identities") {
    dkdv::Sampler sampler(42);
    for (int i = 0; i < 200; ++i) {
        Projective x(sampler.generic()), y(sampler.generic()), z(sampler.generic());
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x / y) * y == x);
    }
}

TEST_CASE("laurent arithmetic on the stated cases") {
    const long t = 8;
    auto eps = LaurentQ::epsilon(t);
    auto eps_inv = LaurentQ::monomial(Rational(1), -1, t);

    SUBCASE("exponent addition") {
        auto p = eps_inv * eps;
        CHECK(p.valuation() == 0);
        CHECK(p.coeff(0) == Rational(1));
        for (long e = 1; e < p.truncation(); ++e) CHECK(p.coeff(e) == Rational(0));
    }
    SUBCASE("leading-term cancellation renormalizes the valuation") {
        auto s = eps_inv + LaurentQ::constant(Rational(1), t);
        auto u = -eps_inv + LaurentQ::constant(Rational(2), t);
        auto sum = s + u;
        CHECK(sum.valuation() == 0);
        CHECK(sum.coeff(0) == Rational(3));
    }
    SUBCASE("difference of squares") {
        auto one = LaurentQ::constant(Rational(1), t);
        auto p = (one + eps) * (one - eps);
        CHECK(p.valuation() == 0);
        CHECK(p.coeff(0) == Rational(1));
        CHECK(p.coeff(1) == Rational(0));
        CHECK(p.coeff(2) == Rational(-1));
    }
    SUBCASE("truncation propagation") {
        auto s = LaurentQ::monomial(Rational(1), 0, 5);
        auto u = LaurentQ::monomial(Rational(1), 2, 4);
        CHECK((s + u).truncation() == 4);
        CHECK((s * u).truncation() == 6);  // min(val(s)+trunc(u), val(u)+trunc(s))
    }
}

TEST_CASE("laurent reciprocal") {
    const long t = 8;
    SUBCASE("monomial") {
        auto r = LaurentQ::epsilon(t).reciprocal();
        CHECK(r.valuation() == -1);
        CHECK(r.coeff(-1) == Rational(1));
    }
    SUBCASE("unit part, checked by multiplying back to one") {
        auto s = LaurentQ::constant(Rational(2), t) + LaurentQ::epsilon(t);
        auto r = s.reciprocal();
        // independent check: s * (1/s) = 1 on the whole known window
        auto prod = s * r;
        CHECK(prod.valuation() == 0);
        CHECK(prod.coeff(0) == Rational(1));
        for (long e = 1; e < prod.truncation(); ++e) CHECK(prod.coeff(e) == Rational(0));
        // frozen leading coefficients 1/2, -1/4, 1/8
        CHECK(r.coeff(0) == Rational(1, 2));
        CHECK(r.coeff(1) == Rational(-1, 4));
        CHECK(r.coeff(2) == Rational(1, 8));
        CHECK(r.known_coeff_count() == s.known_coeff_count());
    }
    SUBCASE("exact zero has no reciprocal") {
        CHECK_THROWS_AS(LaurentQ::exact_zero().reciprocal(), dkdv::ExactZeroReciprocal);
    }
    SUBCASE("truncated zero reports an undetermined leading coefficient") {
        auto s = LaurentQ::epsilon(4);
        auto cancelled = s - s;  // 0 + O(eps^4)
        CHECK(cancelled.is_truncated_zero());
        CHECK_THROWS_AS(cancelled.reciprocal(), dkdv::UndeterminedLeading);
    }
}

TEST_CASE("entry classification") {
    const long t = 6;
    auto zero_like = -LaurentQ::epsilon(t) - LaurentQ::monomial(Rational(3), 2, t);
    CHECK(zero_like.classify() == EntrySignature::zero_like(1));

    auto inf_like = LaurentQ::monomial(Rational(-2), -1, t) + LaurentQ::constant(Rational(5), t);
    CHECK(inf_like.classify() == EntrySignature::inf_like(1));

    auto regular = LaurentQ::constant(Rational(7, 3), t) + LaurentQ::epsilon(t);
    CHECK(regular.classify() == EntrySignature::regular());

    CHECK(LaurentQ::exact_zero().classify() ==
          EntrySignature::zero_like(EntrySignature::kInfiniteOrder));

    auto s = LaurentQ::epsilon(4);
    CHECK_THROWS_AS((s - s).classify(), dkdv::UndeterminedLeading);
}

TEST_CASE("classification is stable under raising the truncation order") {
    dkdv::Sampler sampler(7);
    for (int i = 0; i < 200; ++i) {
        long val = sampler.integer(-4, 4);
        Rational lead = sampler.generic();
        auto narrow = LaurentQ::monomial(lead, val, val + 3);
        auto wide = LaurentQ::monomial(lead, val, val + 11);
        CHECK(narrow.classify() == wide.classify());
    }
}

TEST_CASE("valuation additivity and reciprocal round trip" * doctest::timeout(60)) {
    dkdv::Sampler sampler(2024);
    for (int i = 0; i < 300; ++i) {
        auto s = random_series(sampler);
        auto u = random_series(sampler);
        CHECK((s * u).valuation() == s.valuation() + u.valuation());
        auto prod = s * s.reciprocal();
        CHECK(prod.valuation() == 0);
        CHECK(prod.coeff(0) == Rational(1));
        for (long e = 1; e < prod.truncation(); ++e) CHECK(prod.coeff(e) == Rational(0));
    }
}

TEST_CASE("prime-field carrier matches rational arithmetic through the modulus") {
    CHECK(dkdv::is_prime_u64(Zp::modulus));
    dkdv::Sampler sampler(99);
    for (int i = 0; i < 200; ++i) {
        Rational x = sampler.generic(), y = sampler.generic();
        CHECK(Zp::from_rational(x + y) == Zp::from_rational(x) + Zp::from_rational(y));
        CHECK(Zp::from_rational(x * y) == Zp::from_rational(x) * Zp::from_rational(y));
        CHECK(Zp::from_rational(x - y) == Zp::from_rational(x) - Zp::from_rational(y));
        if (!y.is_zero())
            CHECK(Zp::from_rational(x / y) == Zp::from_rational(x) / Zp::from_rational(y));
    }
    CHECK_THROWS_AS(Zp{0}.inverse(), std::domain_error);
}
