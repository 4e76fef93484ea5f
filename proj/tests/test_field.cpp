#include <doctest.h>

#include <numeric>

#include "wedderkit/field.hpp"
#include "wedderkit/numutil.hpp"

using namespace wk;

TEST_CASE("field parsing and canonical strings") {
    AbelianField Q = parse_field("Q");
    CHECK(Q == AbelianField::rationals());
    CHECK(Q.degree() == 1);
    CHECK(Q.to_string() == "Q");

    AbelianField F12 = parse_field("Q(zeta_12)");
    CHECK(F12 == AbelianField::cyclotomic(12));
    CHECK(F12.degree() == 4);
    CHECK(F12.to_string() == "Q(zeta_12)");

    AbelianField R5 = parse_field("Q(zeta_5)^{4}");
    CHECK(R5 == AbelianField::fixed_field(5, {4}));
    CHECK(R5.fixing_subgroup() == std::vector<long>({1, 4}));
    CHECK(R5.degree() == 2);
    CHECK(parse_field(R5.to_string()) == R5);

    // Q(zeta_2) is Q in disguise
    CHECK(parse_field("Q(zeta_2)").is_rational_field());
    CHECK(parse_field("Q(zeta_2)").to_string() == "Q");

    CHECK_THROWS_AS(parse_field("Q(zeta_0)"), InvalidParameters);
    CHECK_THROWS_AS(parse_field("Q(zeta_)"), InvalidParameters);
    CHECK_THROWS_AS(parse_field("Qx"), InvalidParameters);
    CHECK_THROWS_AS(parse_field("Q(zeta_6)^{2}"), InvalidParameters);
    CHECK_THROWS_AS(parse_field("Q(zeta_6)^{}"), InvalidParameters);
    CHECK_THROWS_AS(parse_field("Q(zeta_6)^{1,}"), InvalidParameters);
}

TEST_CASE("galois images") {
    AbelianField Q = AbelianField::rationals();
    for (int k : {1, 2, 3, 4, 5, 6, 8, 12})
        CHECK(galois_image(Q, k).residues == units_mod(k));

    // Gal(Q(zeta_12)/Q(zeta_3)) fixes zeta_3, so its image mod 12 is {1, 7}
    CHECK(galois_image(AbelianField::cyclotomic(3), 12).residues ==
          std::vector<long>({1, 7}));
    CHECK(galois_image(AbelianField::cyclotomic(4), 2).residues == std::vector<long>({1}));
    CHECK(galois_image(AbelianField::cyclotomic(5), 3).residues == std::vector<long>({1, 2}));

    // the image is a subgroup of U(k) of size [F(zeta_k) : F]
    for (const AbelianField& F :
         {AbelianField::cyclotomic(3), AbelianField::fixed_field(8, {7}),
          AbelianField::fixed_field(5, {4}), AbelianField::cyclotomic(12)}) {
        for (int k = 1; k <= 24; ++k) {
            GaloisImage I = galois_image(F, k);
            CHECK(euler_phi(k) % I.size() == 0);
            for (long a : I.residues)
                for (long b : I.residues) CHECK(I.contains(mul_mod(a, b, k)));
            // |I_k| * [F : Q] = [F(zeta_k) : Q] = phi(lcm(k, m)) / |H| ... via degrees:
            long L = std::lcm(static_cast<long>(k), static_cast<long>(F.modulus()));
            long HL = 0;  // size of the subgroup of U(L) fixing F(zeta_k)
            for (long s : units_mod(L)) {
                bool fixes_F = std::find(F.fixing_subgroup().begin(), F.fixing_subgroup().end(),
                                         mod_reduce(s, F.modulus())) != F.fixing_subgroup().end();
                if (fixes_F && mod_reduce(s, k) == (k == 1 ? 0 : 1)) ++HL;
            }
            CHECK(I.size() * HL * F.degree() == euler_phi(L));
        }
    }
}

TEST_CASE("traces down to the base field") {
    AbelianField Q = AbelianField::rationals();
    CHECK(trace_to_F(Q, 4, 2) == CycloNumber::from_rational(4, -2));
    CHECK(trace_to_F(Q, 3, 1) == CycloNumber::from_rational(3, -1));
    CHECK(trace_to_F(Q, 3, 0) == CycloNumber::from_rational(3, 2));
    CHECK(trace_to_F(AbelianField::cyclotomic(3), 3, 1) == CycloNumber::root(3, 1));

    // invariance under the acting image
    for (const AbelianField& F : {Q, AbelianField::cyclotomic(4), AbelianField::fixed_field(5, {4})}) {
        for (int k : {3, 4, 5, 8, 12}) {
            GaloisImage I = galois_image(F, k);
            for (long i = 0; i < k; ++i)
                for (long t : I.residues)
                    CHECK(trace_to_F(F, k, mod_reduce(i * t, k)) == trace_to_F(F, k, i));
        }
    }

    // the trace lands in F
    for (const AbelianField& F : {AbelianField::cyclotomic(3), AbelianField::fixed_field(8, {7})})
        for (int k : {3, 8, 12})
            for (long i = 0; i < k; ++i) CHECK(F.contains(trace_to_F(F, k, i)));
}

TEST_CASE("field membership") {
    AbelianField Q = AbelianField::rationals();
    CycloNumber v = CycloNumber::root(3, 1) + CycloNumber::root(3, 2);  // zeta_3 + zeta_3^2
    CHECK(v == CycloNumber::from_rational(3, -1));
    CHECK(Q.contains(v));
    // hence the fixed field of zeta_3 -> zeta_3^2 is Q itself
    CHECK(intersect_with_cyclotomic_degree(AbelianField::cyclotomic(3), 3, {2}) == 1);
    CHECK(AbelianField::cyclotomic(3).contains(CycloNumber::root(6, 2)));
    CHECK(!AbelianField::rationals().contains(CycloNumber::root(6, 2)));
    CHECK(!AbelianField::cyclotomic(4).contains(CycloNumber::root(12, 4)));
    CHECK(AbelianField::cyclotomic(4).contains(CycloNumber::root(12, 3)));
    CHECK_THROWS_AS(AbelianField::cyclotomic(3).contains(CycloNumber::root(8, 1)),
                    IncompatibleLevels);
}

TEST_CASE("signatures") {
    CHECK(signature(AbelianField::rationals()) == std::pair<long, long>{1, 0});
    CHECK(signature(AbelianField::cyclotomic(3)) == std::pair<long, long>{0, 1});
    CHECK(signature(AbelianField::cyclotomic(12)) == std::pair<long, long>{0, 2});
    CHECK(signature(AbelianField::fixed_field(5, {4})) == std::pair<long, long>{2, 0});
    CHECK(signature(AbelianField::fixed_field(8, {7})) == std::pair<long, long>{2, 0});
}

TEST_CASE("intersection degrees with cyclotomic fixed fields") {
    AbelianField Q = AbelianField::rationals();
    for (int k : {1, 2, 3, 4, 5, 8, 12})
        CHECK(intersect_with_cyclotomic_degree(Q, k, {1}) == 1);

    CHECK(intersect_with_cyclotomic_degree(AbelianField::cyclotomic(4), 4, {1}) == 2);
    CHECK(intersect_with_cyclotomic_degree(AbelianField::cyclotomic(3), 4, {1}) == 1);
    CHECK(intersect_with_cyclotomic_degree(AbelianField::fixed_field(5, {4}), 5, {1}) == 2);
    // Q(zeta_8) meets Q(zeta_12) in Q(zeta_4)
    CHECK(intersect_with_cyclotomic_degree(AbelianField::cyclotomic(12), 8, {1}) == 2);
    // real subfield inside: Q(zeta_8)^{1,7} meets Q(zeta_8) in itself
    CHECK(intersect_with_cyclotomic_degree(AbelianField::fixed_field(8, {7}), 8, {1}) == 2);
    CHECK(intersect_with_cyclotomic_degree(AbelianField::fixed_field(8, {7}), 8, {7}) == 2);
    CHECK(intersect_with_cyclotomic_degree(AbelianField::fixed_field(8, {7}), 8, {3}) == 1);
}

TEST_CASE("full image is equivalent to trivial intersection") {
    // |I_k(F)| = phi(k) holds exactly when F meets Q(zeta_k) in Q
    for (const AbelianField& F :
         {AbelianField::rationals(), AbelianField::cyclotomic(3), AbelianField::cyclotomic(4),
          AbelianField::cyclotomic(5), AbelianField::fixed_field(8, {7}),
          AbelianField::fixed_field(5, {4})}) {
        for (int k = 1; k <= 30; ++k) {
            const bool full = galois_image(F, k).size() == euler_phi(k);
            const bool trivial_meet = intersect_with_cyclotomic_degree(F, k, {1}) == 1;
            CHECK(full == trivial_meet);
        }
    }
}

TEST_CASE("full image descends to divisors") {
    for (const AbelianField& F :
         {AbelianField::cyclotomic(3), AbelianField::cyclotomic(8), AbelianField::fixed_field(5, {4})}) {
        for (int mp = 1; mp <= 60; ++mp) {
            if (galois_image(F, mp).size() != euler_phi(mp)) continue;
            for (int n = 1; n <= mp; ++n)
                if (mp % n == 0) CHECK(galois_image(F, n).size() == euler_phi(n));
        }
    }
}
