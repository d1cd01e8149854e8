#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace vtwist;

namespace {

UniPoly X() { return UniPoly::variable(); }
UniPoly P(const char* s) { return parse_unipoly(s); }
UniPoly T(const char* s) { return parse_unipoly(s, 't'); }
BiPoly B(const char* s) { return parse_bipoly(s); }

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(to_string(make_rational(4, 2)), "2");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("x"), ParseError);
    EXPECT_THROW(invert_unit(Rational(0)), DivisionByZero);
}

TEST(PolyArith, GcdIsMonic) {
    EXPECT_EQ(gcd(P("x^2 - 1"), P("x - 1")), P("x - 1"));
    EXPECT_EQ(gcd(P("2*x^2 - 2"), P("3*x + 3")), P("x + 1"));
}

TEST(PolyArith, EvaluateAtTZero) {
    const BiPoly chi = B("t^2 - x");
    EXPECT_EQ(chi(BiPoly()), BiPoly(-X()));
    EXPECT_EQ(specialize_x(chi, 4), T("t^2 - 4"));
}

TEST(PolyArith, DivRemRemultiplies) {
    const auto [q, r] = divrem(P("x^3"), P("x - 2"));
    EXPECT_EQ(q, P("x^2 + 2*x + 4"));
    EXPECT_EQ(r, UniPoly(8));
    EXPECT_EQ(q * P("x - 2") + r, P("x^3"));
    EXPECT_THROW(divrem(P("x"), UniPoly()), DivisionByZero);
}

TEST(PolyArith, BivariateDivisionByMonic) {
    const BiPoly f = B("t^3 + x*t + 1");
    const BiPoly g = B("t^2 - x");
    const auto [q, r] = divrem(f, g);
    EXPECT_EQ(q * g + r, f);
    EXPECT_LT(r.degree(), 2);
}

TEST(Text, RoundTripAndErrors) {
    EXPECT_EQ(to_string(B("t^2 - 3/2*x*t + 1")), "t^2 - 3/2*x*t + 1");
    EXPECT_EQ(to_string(B(" x *t -x^2")), "x*t - x^2");
    EXPECT_EQ(to_string(B("0")), "0");
    EXPECT_THROW(B("t^^2"), ParseError);
    EXPECT_THROW(B(""), ParseError);
    EXPECT_THROW(B("2*y"), ParseError);
    EXPECT_THROW(parse_unipoly("x*t"), ParseError);
}

TEST(Resultant, Examples) {
    EXPECT_EQ(resultant(B("t^2 - x"), B("t")), -X());
    EXPECT_EQ(resultant(B("t - x"), B("t - x - 1")), UniPoly(-1));
    EXPECT_EQ(resultant(P("x^2 + 1"), UniPoly(1)), Rational(1));
    EXPECT_THROW(resultant(UniPoly(), UniPoly()), DomainError);
}

TEST(Resultant, MatchesCofactorOracle) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-4, 4), d(0, 4);
    for (int k = 0; k < 60; ++k) {
        auto rp = [&] {
            std::vector<Rational> v(static_cast<std::size_t>(d(rng)) + 1);
            for (auto& q : v) q = c(rng);
            v.back() = c(rng) == 0 ? Rational(1) : v.back();
            return UniPoly(std::move(v));
        };
        const UniPoly p = rp(), q = rp();
        if (p.is_zero() || q.is_zero()) continue;
        EXPECT_EQ(resultant(p, q), oracle::sylvester_resultant(p, q));
    }
}

TEST(Squarefree, Examples) {
    EXPECT_EQ(squarefree_part(P("x - 1") * P("x - 1")), P("x - 1"));
    EXPECT_EQ(squarefree_part(P("x^2 - 1")), P("x^2 - 1"));
    EXPECT_EQ(squarefree_part(P("x^3 - x^2")), P("x^2 - x"));
    EXPECT_THROW(squarefree_part(UniPoly()), DomainError);
}

TEST(Squarefree, Properties) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int k = 0; k < 50; ++k) {
        UniPoly p(1);
        for (int j = 0; j < 4; ++j) p *= UniPoly(std::vector<Rational>{Rational(c(rng)), Rational(1)});
        const UniPoly s = squarefree_part(p);
        EXPECT_TRUE(divides(s, p));
        EXPECT_EQ(gcd(s, s.derivative()), UniPoly(1));
        EXPECT_TRUE(s.is_monic());
    }
}

TEST(Factor, Examples) {
    const Factorization a = factor_rationals(T("t^2 - 1"));
    ASSERT_EQ(a.factors.size(), 2u);
    EXPECT_EQ(a.expand(), T("t^2 - 1"));
    const Factorization b = factor_rationals(T("t^2 - 2"));
    ASSERT_EQ(b.factors.size(), 1u);
    EXPECT_EQ(b.factors[0].second, 1);
    EXPECT_TRUE(is_irreducible(T("t^2 - 2")));
    const Factorization c = factor_rationals(T("t^2"));
    ASSERT_EQ(c.factors.size(), 1u);
    EXPECT_EQ(c.factors[0].first, T("t"));
    EXPECT_EQ(c.factors[0].second, 2);
    EXPECT_THROW(factor_rationals(UniPoly()), DomainError);
}

TEST(Factor, RemultiplicationCloses) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-5, 5), deg(1, 3), nf(1, 3);
    for (int k = 0; k < 60; ++k) {
        UniPoly p(Rational(c(rng) == 0 ? 2 : c(rng) == 0 ? 1 : 3, 2));
        const int n = nf(rng);
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> v(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& q : v) q = c(rng);
            v.back() = 1;
            p *= UniPoly(std::move(v));
        }
        const Factorization f = factor_rationals(p);
        EXPECT_EQ(f.expand(), p);
        for (const auto& [q, m] : f.factors) {
            EXPECT_TRUE(q.is_monic());
            EXPECT_TRUE(is_irreducible(q));
        }
    }
}

TEST(Factor, QuarticWithoutRationalRoots) {
    // (x^2 + 1)(x^2 - 3): no rational roots, splits into quadratics
    const Factorization f = factor_rationals(P("x^4 - 2*x^2 - 3"));
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.factors[0].first.degree(), 2);
    EXPECT_EQ(f.factors[1].first.degree(), 2);
    EXPECT_TRUE(is_irreducible(P("x^4 + 1")));
}

TEST(NumberField, Arithmetic) {
    const auto k = NumberField::make(T("t^2 - 2"));
    const NumberFieldElement s = NumberFieldElement::generator(k);
    EXPECT_EQ(s * s, NumberFieldElement(2));
    EXPECT_EQ(s * s.inverse(), NumberFieldElement(1));
    EXPECT_EQ(s.trace(), Rational(0));
    EXPECT_EQ((s + NumberFieldElement(1)).trace(), Rational(2));
    EXPECT_THROW(NumberField::make(T("t^2 - 1")), ValidationError);
    const auto other = NumberField::make(T("t^2 - 3"));
    EXPECT_THROW(s + NumberFieldElement::generator(other), DomainError);
}

TEST(FunctionFieldIrreducible, Examples) {
    EXPECT_TRUE(irreducible_over_function_field(B("t^2 - x")));
    EXPECT_FALSE(irreducible_over_function_field(B("t - x") * B("t - x - 1")));
    EXPECT_FALSE(irreducible_over_function_field(B("t^2 - x^2")));
    EXPECT_THROW(irreducible_over_function_field(B("2*t^2 - x")), ValidationError);
}

TEST(FunctionFieldIrreducible, CertificatesCarryFactors) {
    const FunctionFieldFactorSearch a = factor_search_over_function_field(B("t^2 - 2*x*t - t + x^2 + x"));
    ASSERT_TRUE(a.factor);
    EXPECT_TRUE(divides(*a.factor, B("t^2 - 2*x*t - t + x^2 + x")));
    const FunctionFieldFactorSearch b = factor_search_over_function_field(B("t^2"));
    EXPECT_FALSE(b.squarefree);
    ASSERT_TRUE(b.factor);
    EXPECT_EQ(*b.factor, B("t"));
    // t^3 - x is irreducible; t^3 - x^3 has the root t = x
    EXPECT_TRUE(irreducible_over_function_field(B("t^3 - x")));
    EXPECT_FALSE(irreducible_over_function_field(B("t^3 - x^3")));
    // product of two irreducible quadratics over Q(x)
    EXPECT_FALSE(irreducible_over_function_field(B("t^2 - x") * B("t^2 - x - 1")));
    EXPECT_TRUE(irreducible_over_function_field(B("t^4 - x")));
}

TEST(FunctionFieldIrreducible, AgreesWithRootOracle) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> c(-3, 3), deg(-1, 3);
    for (int k = 0; k < 80; ++k) {
        const int r = 2 + k % 2;
        std::vector<UniPoly> cc(static_cast<std::size_t>(r) + 1);
        cc.back() = UniPoly(1);
        for (int i = 0; i < r; ++i) {
            std::vector<Rational> v(static_cast<std::size_t>(deg(rng) + 1));
            for (auto& q : v) q = c(rng);
            cc[static_cast<std::size_t>(i)] = UniPoly(std::move(v));
        }
        const BiPoly chi(std::move(cc));
        const FunctionFieldFactorSearch f = factor_search_over_function_field(chi);
        EXPECT_EQ(f.squarefree && f.irreducible, oracle::integral_by_roots(chi)) << to_string(chi);
    }
}

TEST(CharPoly, Examples) {
    const Matrix<UniPoly> m{{UniPoly(0), UniPoly(1)}, {X(), UniPoly(0)}};
    EXPECT_EQ(char_poly(m), B("t^2 - x"));
    EXPECT_EQ(char_poly(Matrix<UniPoly>(3, 3)), B("t^3"));
    const Matrix<UniPoly> d{{X(), UniPoly(0)}, {UniPoly(0), X() + UniPoly(1)}};
    EXPECT_EQ(char_poly(d), B("t - x") * B("t - x - 1"));
    EXPECT_THROW(char_poly(Matrix<UniPoly>(2, 3)), DomainError);
}

TEST(CharPoly, MatchesCofactorAndMinorsAndCayleyHamilton) {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 40; ++k) {
        const std::size_t r = 1 + static_cast<std::size_t>(k % 4);
        const Matrix<UniPoly> m = oracle::random_poly_matrix(rng, r, 2);
        const BiPoly chi = char_poly(m);
        EXPECT_EQ(chi, oracle::char_poly_cofactor(m));
        for (std::size_t j = 1; j <= r; ++j) {
            UniPoly expected = oracle::principal_minor_sum(m, j);
            if (j % 2) expected = -expected;
            EXPECT_EQ(chi.coeff(r - j), expected);
        }
        EXPECT_TRUE(evaluate_at_matrix(chi, m).is_zero());
    }
}

TEST(Eigenspace, Examples) {
    using NFE = NumberFieldElement;
    const Matrix<NFE> nil{{NFE(0), NFE(1)}, {NFE(0), NFE(0)}};
    EXPECT_EQ(generalized_eigenspace(nil, NFE(0)).size(), 2u);
    const Matrix<NFE> diag{{NFE(1), NFE(0)}, {NFE(0), NFE(2)}};
    const auto e1 = generalized_eigenspace(diag, NFE(1));
    ASSERT_EQ(e1.size(), 1u);
    EXPECT_EQ(e1[0], (std::vector<NFE>{NFE(1), NFE(0)}));
    const Matrix<NFE> swap{{NFE(0), NFE(1)}, {NFE(1), NFE(0)}};
    const auto e = generalized_eigenspace(swap, NFE(1));
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0][0], e[0][1]);
    EXPECT_TRUE(generalized_eigenspace(diag, NFE(5)).empty());
}

TEST(Eigenspace, DimensionsSumToRank) {
    std::mt19937_64 rng(29);
    for (int k = 0; k < 30; ++k) {
        const std::size_t r = 1 + static_cast<std::size_t>(k % 4);
        const Matrix<UniPoly> m = oracle::random_poly_matrix(rng, r, 2);
        const Rational x0 = make_rational(k % 5 - 2, 1 + k % 3);
        const Matrix<Rational> m0 = m.map([&](const UniPoly& p) { return p(x0); });
        const Matrix<NumberFieldElement> mm = m0.map([](const Rational& q) { return NumberFieldElement(q); });
        std::size_t total = 0;
        for (const auto& [p, mult] : factor_rationals(char_poly(m0)).factors) {
            const auto field = NumberField::from_irreducible_factor(p);
            const auto basis = generalized_eigenspace(mm, NumberFieldElement::generator(field));
            EXPECT_EQ(basis.size(), static_cast<std::size_t>(mult));
            total += basis.size() * static_cast<std::size_t>(p.degree());
        }
        EXPECT_EQ(total, r);
    }
}

TEST(Nilpotency, Examples) {
    EXPECT_TRUE(nilpotency_test(Matrix<Rational>{{0, 1}, {0, 0}}));
    EXPECT_FALSE(nilpotency_test(Matrix<Rational>::identity(2)));
    EXPECT_TRUE(nilpotency_test(Matrix<Rational>{{1, -1}, {1, -1}}));
}

TEST(Matrix, KernelSolveInverse) {
    const Matrix<Rational> a{{1, 2}, {2, 4}};
    EXPECT_EQ(rank(a), 1u);
    const auto k = kernel_basis(a);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_TRUE((a * k[0] == std::vector<Rational>{0, 0}));
    EXPECT_FALSE(solve(a, std::vector<Rational>{1, 0}));
    EXPECT_FALSE(inverse(a));
    const Matrix<Rational> b{{2, 1}, {1, 1}};
    EXPECT_EQ(*inverse(b) * b, Matrix<Rational>::identity(2));
    EXPECT_EQ(determinant(b), oracle::laplace_det(b));
}
