#include <doctest.h>

#include <algorithm>

#include "symfact/certify.hpp"
#include "symfact/rng.hpp"

using namespace symfact;

namespace {

const CertificateCheck& find_check(const Certificate& cert, const std::string& name) {
    const auto it = std::find_if(cert.checks.begin(), cert.checks.end(),
                                 [&](const CertificateCheck& c) { return c.name == name; });
    REQUIRE(it != cert.checks.end());
    return *it;
}

} // namespace

TEST_CASE("classify_spectrum partitions an invertible spectrum") {
    EigenvalueSet eigs;
    eigs.real_eigenvalues = {3.0, 1.0, -2.0};
    eigs.complex_pairs = {{0.5, 1.5}};
    const SpectrumClassification c = classify_spectrum(eigs);
    CHECK(c.s == 3);
    CHECK(c.pos_real == 2);
    CHECK(c.neg_real == 1);
    CHECK(c.nonreal == 2);

    EigenvalueSet singular;
    singular.real_eigenvalues = {1.0, 0.0};
    CHECK_THROWS_AS(classify_spectrum(singular), SingularMatrix);
}

TEST_CASE("certificate passes on a planted mixed-spectrum factorization") {
    Rng rng(201);
    const SpectrumSpec spec = random_simple_spectrum(1, 2, 1, rng);
    const DenseMatrix s = random_well_conditioned(spec.dimension(), rng);
    const auto [b, fact] = factorize_from_spec(spec, s);
    const Certificate cert = certify(b, fact);
    CHECK(cert.overall_pass());
    CHECK(cert.m == static_cast<int>(spec.dimension()));
    CHECK(cert.s == 3);
    CHECK(cert.nonreal_count == 2);
    CHECK(cert.twice_lower == cert.m - cert.s);
    CHECK(cert.twice_upper == cert.m + cert.s);

    // both inertia bounds applicable and satisfied
    const CertificateCheck& pt = find_check(cert, "prop_T");
    const CertificateCheck& pw = find_check(cert, "prop_W");
    CHECK(pt.applicable);
    CHECK(pt.pass);
    CHECK(pw.applicable);
    CHECK(pw.pass);
    CHECK(find_check(cert, "cor_neg").pass);
    CHECK(find_check(cert, "cor_pos").pass);

    // lemma applies exactly when the two inertias differ
    const CertificateCheck& lemma = find_check(cert, "lemma1");
    CHECK(lemma.applicable == (fact.inertia_T != fact.inertia_W));
    if (lemma.applicable) CHECK(lemma.pass);

    // s != 0 here, so the balanced-inertia corollary is not applicable
    CHECK_FALSE(find_check(cert, "maincor").applicable);
}

TEST_CASE("all-non-real case activates the balanced-inertia corollary") {
    Rng rng(211);
    const SpectrumSpec spec = random_all_complex_spectrum(6, rng);
    const DenseMatrix s = random_well_conditioned(6, rng);
    const auto [b, fact] = factorize_from_spec(spec, s);
    const Certificate cert = certify(b, fact);
    CHECK(cert.overall_pass());
    CHECK(cert.s == 0);
    CHECK(cert.twice_lower == cert.twice_upper);
    const CertificateCheck& mc = find_check(cert, "maincor");
    CHECK(mc.applicable);
    CHECK(mc.pass);
    CHECK(fact.inertia_T == Inertia{3, 3, 0});
    CHECK(fact.inertia_W == Inertia{3, 3, 0});
    // with equal inertias the lemma is vacuous
    CHECK_FALSE(find_check(cert, "lemma1").applicable);
}

TEST_CASE("all-real extreme gives vacuous bounds that still pass") {
    Rng rng(223);
    const DenseMatrix b = random_symmetric_with_inertia(Inertia{3, 2, 0}, rng);
    SymFactorization fact;
    fact.T = DenseMatrix::identity(5);
    fact.W = b;
    fact.inertia_T = Inertia{5, 0, 0};
    fact.inertia_W = inertia(b);
    fact.reconstruction_residual = 0.0;
    fact.symmetry_residuals = {0.0, 0.0};
    fact.path = FactorizePath::SPD;
    const Certificate cert = certify(b, fact);
    CHECK(cert.overall_pass());
    CHECK(cert.s == 5);
    CHECK(cert.twice_lower == 0);
    CHECK(cert.twice_upper == 10);
}

TEST_CASE("certify rejects inconsistent factor inputs") {
    Rng rng(227);
    const SpectrumSpec spec = random_simple_spectrum(1, 1, 0, rng);
    const DenseMatrix s = random_well_conditioned(spec.dimension(), rng);
    const auto [b, fact] = factorize_from_spec(spec, s);
    SymFactorization broken = fact;
    broken.W = scale(broken.W, 2.0); // T * W no longer reconstructs B
    broken.reconstruction_residual = 1.0;
    CHECK_THROWS_AS(certify(b, broken), InvalidFactorization);
}

TEST_CASE("bound check fails on a forged inertia claim") {
    Rng rng(229);
    const SpectrumSpec spec = random_all_complex_spectrum(4, rng);
    const DenseMatrix s = random_well_conditioned(4, rng);
    const auto [b, fact] = factorize_from_spec(spec, s);
    SymFactorization forged = fact;
    forged.inertia_T = Inertia{4, 0, 0}; // impossible when s = 0
    const Certificate cert = certify(b, forged);
    CHECK_FALSE(cert.overall_pass());
    CHECK_FALSE(find_check(cert, "prop_T").pass);
}

TEST_CASE("near-boundary imaginary parts mark the certificate indeterminate") {
    // plant a complex pair whose imaginary part sits near the coercion
    // threshold; classification of s is then ambiguous by design
    SpectrumSpec spec;
    spec.real_blocks = {{2.0, 1}, {-1.0, 1}};
    spec.complex_blocks = {{1.0, 5e-8, 1}};
    Rng rng(233);
    const DenseMatrix s = random_well_conditioned(4, rng);
    const auto [b, fact] = factorize_from_spec(spec, s);
    const Certificate cert = certify(b, fact);
    CHECK(cert.indeterminate);
}
