#include "flipcalc/motive.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using flipcalc::Integer;
using flipcalc::motive::Monomial;
using flipcalc::motive::Motive;
namespace motive = flipcalc::motive;

namespace {

Motive L(unsigned long k = 1) { return Motive::lefschetz(k); }
Motive A(const char* name) { return Motive::atom(name); }

// h_2(1, L, ..., L^n): the class of Sym^2 P^n from the Macdonald product.
Motive complete_h2(unsigned long n) {
  Motive out;
  for (unsigned long i = 0; i <= n; ++i) {
    for (unsigned long j = i; j <= n; ++j) out += L(i + j);
  }
  return out;
}

// Point count of the blowup of X in Z with exceptional P^{c-1}-bundle, at L = q.
Integer blowup_count(const Integer& x, const Integer& z, long c, const Integer& q) {
  Integer pc = 0;
  Integer power = 1;
  for (long i = 0; i < c; ++i) {
    pc += power;
    power *= q;
  }
  return x - z + z * pc;
}

}  // namespace

TEST(Ring, PointIsUnit) {
  EXPECT_EQ(A("pt") * A("X"), A("X"));
  EXPECT_EQ(A("pt"), Motive(1));
}

TEST(Ring, SmallProducts) {
  EXPECT_EQ((1 + L()) * (1 + L()), 1 + 2 * L() + L(2));
  EXPECT_EQ(motive::class_of_pn(1) * motive::class_of_pn(1), 1 + 2 * L() + L(2));
  EXPECT_TRUE((A("X") - A("X")).is_zero());
}

TEST(Ring, AxiomsOnRandomMotives) {
  flipcalc::testkit::Generator gen(11);
  for (int i = 0; i < 200; ++i) {
    const Motive a = gen.motive(), b = gen.motive(), c = gen.motive();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + (-a), Motive());
    const Motive sum = a * b + c;
    for (const auto& [m, coeff] : sum.terms()) EXPECT_NE(coeff, 0);
    Motive self = a;
    self -= self;
    EXPECT_TRUE(self.is_zero());
    self = a;
    self += self;
    EXPECT_EQ(self, 2 * a);
  }
}

TEST(ClassOfPn, Values) {
  EXPECT_EQ(motive::class_of_pn(0), Motive(1));
  EXPECT_EQ(motive::class_of_pn(3), 1 + L() + L(2) + L(3));
}

TEST(Blowup, PlaneInPoint) {
  EXPECT_EQ(motive::blowup_class(motive::class_of_pn(2), 1, 2), 1 + 2 * L() + L(2));
  EXPECT_THROW(motive::blowup_class(A("X"), A("Z"), 1), flipcalc::DomainError);
}

TEST(Flip, BlowupsAgree) {
  // Bl_Z X = Bl_Z' X' with Z = F x P^r of codim s+1 and Z' = F x P^s of codim r+1.
  for (unsigned long r = 1; r <= 5; ++r) {
    for (unsigned long s = 1; s <= 5; ++s) {
      const Motive x = A("X");
      const Motive xp = x - motive::flip_difference(A("F"), r, s);
      EXPECT_EQ(motive::blowup_class(x, A("F") * motive::class_of_pn(r), long(s) + 1),
                motive::blowup_class(xp, A("F") * motive::class_of_pn(s), long(r) + 1))
          << r << " " << s;
    }
  }
}

TEST(Flip, PointCountOracle) {
  // The same identity evaluated numerically at several L = q, F = f, X = x.
  for (unsigned long r = 0; r <= 5; ++r) {
    for (unsigned long s = 0; s <= 5; ++s) {
      for (long q : {2, 3, 7}) {
        const Integer f = 5, x = 1000;
        Integer pr = 0, ps = 0, pw = 1;
        for (unsigned long i = 0; i <= std::max(r, s); ++i) {
          if (i <= r) pr += pw;
          if (i <= s) ps += pw;
          pw *= q;
        }
        const Integer xp = x - motive::specialize(motive::flip_difference(A("F"), r, s), q,
                                                  {{"F", f}});
        EXPECT_EQ(blowup_count(x, f * pr, long(s) + 1, q), blowup_count(xp, f * ps, long(r) + 1, q));
      }
    }
  }
}

TEST(Flip, EqualShapesCancel) {
  for (unsigned long r = 0; r <= 5; ++r) {
    EXPECT_TRUE(motive::flip_difference(A("F"), r, r).is_zero());
  }
  EXPECT_EQ(motive::flip_difference(A("F"), 2, 1), A("F") * L(2));
}

TEST(Sym2Class, ProjectiveSpacesMatchMacdonald) {
  for (unsigned long n = 0; n <= 8; ++n) {
    EXPECT_EQ(motive::sym2_class(motive::class_of_pn(n)), complete_h2(n)) << n;
  }
  EXPECT_EQ(motive::sym2_class(motive::class_of_pn(1)), motive::class_of_pn(2));
}

TEST(Sym2Class, Atoms) {
  EXPECT_EQ(motive::sym2_class(A("C")), A("Sym2C"));
  EXPECT_EQ(motive::sym2_class(3 * A("C")), 3 * A("Sym2C") + 3 * A("C") * A("C"));
  EXPECT_EQ(motive::sym2_class(L() * A("C") + 1), L(2) * A("Sym2C") + L() * A("C") + 1);
}

TEST(Sym2Class, OutsideFragment) {
  EXPECT_THROW(motive::sym2_class(A("C") * A("D")), motive::FragmentError);
  EXPECT_THROW(motive::sym2_class(1 - L()), motive::FragmentError);
}

TEST(HilbertSquareClass, ProjectivePlane) {
  EXPECT_EQ(motive::hilbert_square_class(motive::class_of_pn(2), 2),
            1 + 2 * L() + 3 * L(2) + 2 * L(3) + L(4));
  EXPECT_EQ(motive::hilbert_square_class(motive::class_of_pn(1), 1), motive::class_of_pn(2));
}

TEST(HilbertSquareClass, PointCountsOfP3) {
  // |(P^3)^[2]| = |Sym^2 P^3| + |P^3| * (|P^2| - 1), checked at q = 2.
  const Motive h = motive::hilbert_square_class(motive::class_of_pn(3), 3);
  const long p3 = 15, p2 = 7;
  const long sym = (p3 * p3 + (1 + 4 + 16 + 64)) / 2;
  EXPECT_EQ(motive::specialize(h, 2, {}), sym + p3 * (p2 - 1));
}

TEST(Specialize, UnassignedAtom) {
  EXPECT_THROW(motive::specialize(A("X"), 1, {}), flipcalc::DomainError);
  EXPECT_EQ(motive::specialize(2 * A("X") * L(3) - 1, 2, {{"X", 3}}), 47);
}

TEST(Monomial, CanonicalOrder) {
  EXPECT_LT((Monomial{{}, 5}), (Monomial{{"A"}, 0}));
  EXPECT_LT((Monomial{{"A"}, 3}), (Monomial{{"B"}, 0}));
  EXPECT_LT((Monomial{{"A"}, 0}), (Monomial{{"A"}, 1}));
}

TEST(Atoms, Names) {
  EXPECT_TRUE(motive::is_valid_atom_name("D_F1"));
  EXPECT_FALSE(motive::is_valid_atom_name("1X"));
  EXPECT_FALSE(motive::is_valid_atom_name("L"));
  EXPECT_FALSE(motive::is_valid_atom_name("Sym2"));
  EXPECT_THROW(Motive::atom("a-b"), flipcalc::DomainError);
}

TEST(Json, Layout) {
  EXPECT_EQ(motive::to_json(2 * A("X") * L() - 1).dump(), R"([[-1,0,[]],[2,1,["X"]]])");
}
