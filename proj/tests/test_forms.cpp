#include <doctest.h>

#include <random>
#include <vector>

#include "tdcalc/eval.hpp"
#include "tdcalc/form.hpp"

#include "test_util.hpp"

using namespace tdcalc;
using namespace tdcalc::testutil;

namespace {

std::vector<int> mask_slots(FrameMask m) {
  std::vector<int> out;
  for (int p = 0; p < 64; ++p)
    if (m & (1ull << p)) out.push_back(p);
  return out;
}

// Independent sign oracle: bubble sort the concatenated slot lists.
int oracle_sign(FrameMask a, FrameMask b) {
  if (a & b) return 0;
  std::vector<int> v = mask_slots(a);
  for (int p : mask_slots(b)) v.push_back(p);
  int sign = 1;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
  return sign;
}

Form basis_form(ChartPtr chart, FrameMask m) {
  Form out = Form::scalar(chart, 1);
  for (int p : mask_slots(m)) out = wedge(out, Form::covector(chart, p));
  return out;
}

}  // namespace

TEST_CASE("wedge signs match the sorting oracle") {
  auto chart = make_elliptic_chart(2, 1, 1);
  int n = static_cast<int>(frame(*chart).size());
  for (FrameMask a = 0; a < (1ull << n); a += 3)
    for (FrameMask b = 0; b < (1ull << n); b += 5) {
      Form w = wedge(basis_form(chart, a), basis_form(chart, b));
      int s = oracle_sign(a, b);
      if (s == 0)
        CHECK(w.is_zero());
      else
        CHECK(w == GaussianRational(s) * basis_form(chart, a | b));
    }
}

TEST_CASE("exterior derivative against the derivation oracle") {
  auto chart = make_elliptic_chart(2, 1, 1);
  auto fr = frame(*chart);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    FnElem f = rand_fn(*chart, rng, 1);
    FrameMask m = 0;
    int deg = rand_int(rng, 0, 3);
    int n = static_cast<int>(fr.size());
    while (mask_degree(m) < deg) m |= 1ull << rand_int(rng, 0, n - 1);
    Form a = f * basis_form(chart, m);
    // oracle: d(f xi_I) = sum_p derive_p(f) xi_p ^ xi_I, frame legs closed
    Form expect(chart);
    for (int p = 0; p < n; ++p)
      expect += wedge(derive(f, *chart, fr[p]) * Form::covector(chart, p),
                      basis_form(chart, m));
    CHECK(d(a) == expect);
  }
}

TEST_CASE("derivations on single monomials") {
  auto chart = make_elliptic_chart(1, 0, 1);
  auto fr = frame(*chart);
  FnElem m = fn::r(*chart, 0, 3) * fn::E(*chart, 0, 2) * fn::x(*chart, 0, 2);
  // r dr slot: multiplies by the radial exponent
  CHECK(derive(m, *chart, fr[0]) == GaussianRational(3) * m);
  // angle slot: multiplies by i * fourier mode
  CHECK(derive(m, *chart, fr[1]) ==
        GaussianRational(2) * fn::i_unit(*chart) * m);
  // x slot: downshifts the polynomial exponent
  CHECK(derive(m, *chart, fr[2]) ==
        GaussianRational(2) * fn::r(*chart, 0, 3) * fn::E(*chart, 0, 2) *
            fn::x(*chart, 0, 1));
}

TEST_CASE("contraction is the dual pairing") {
  auto chart = make_elliptic_chart(2, 0, 1);
  int n = static_cast<int>(frame(*chart).size());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      Form r = contract(Multivector::vector(chart, p), Form::covector(chart, q));
      if (p == q)
        CHECK(r == Form::scalar(chart, 1));
      else
        CHECK(r.is_zero());
    }
  // i_{X^Y} = i_Y o i_X
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    int p = rand_int(rng, 0, n - 1), q = rand_int(rng, 0, n - 1);
    if (p == q) continue;
    Form a = rand_mixed_form(chart, rng, n);
    Multivector X = Multivector::vector(chart, p);
    Multivector Y = Multivector::vector(chart, q);
    CHECK(contract(wedge(X, Y), a) == contract(Y, contract(X, a)));
  }
}

TEST_CASE("complex frame round trip") {
  auto chart = make_elliptic_chart(2, 1, 1);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    Form a = rand_mixed_form(chart, rng, 4);
    CHECK(from_complex_frame(to_complex_frame(a)) == a);
  }
}

TEST_CASE("dlog z identities") {
  auto chart = make_elliptic_chart(1, 0, 0);
  Form dlr = Form::covector(chart, 0);
  Form dth = Form::covector(chart, 1);
  Form dlz = dlr + GaussianRational::i() * dth;
  Form dlzb = dlr - GaussianRational::i() * dth;
  // dlogz ^ dlogzbar = -2i dlogr ^ dth
  CHECK(wedge(dlz, dlzb) ==
        GaussianRational(Rational(0), Rational(-2)) * wedge(dlr, dth));
  // d(z) = z dlogz exactly
  Form dz = d(Form::from_fn(chart, fn::z(*chart, 0)));
  CHECK(dz == fn::z(*chart, 0) * dlz);
  CHECK(d(Form::from_fn(chart, fn::zbar(*chart, 0))) ==
        fn::zbar(*chart, 0) * dlzb);
}

TEST_CASE("smoothness of forms") {
  auto chart = make_elliptic_chart(1, 0, 0);
  Form dlr = Form::covector(chart, 0);
  Form dth = Form::covector(chart, 1);
  // r^2 dlogr ^ dth = r dr ^ dth is smooth; dlogr ^ dth is not
  CHECK(is_smooth_form(fn::r(*chart, 0, 2) * wedge(dlr, dth)));
  CHECK(!is_smooth_form(wedge(dlr, dth)));
  CHECK(is_smooth_form(fn::z(*chart, 0) *
                       (dlr + GaussianRational::i() * dth)));  // dz
  CHECK(!is_smooth_form(fn::z(*chart, 0) *
                        (dlr - GaussianRational::i() * dth)));
}

TEST_CASE("exterior exponential") {
  auto chart = make_elliptic_chart(2, 0, 0);
  Form B = wedge(Form::covector(chart, 0), Form::covector(chart, 1)) +
           wedge(Form::covector(chart, 2), Form::covector(chart, 3));
  Form e = exterior_exp(B);
  CHECK(e.degree_part(0) == Form::scalar(chart, 1));
  CHECK(e.degree_part(2) == B);
  CHECK(e.degree_part(4) == wedge(wedge(Form::covector(chart, 0),
                                        Form::covector(chart, 1)),
                                  wedge(Form::covector(chart, 2),
                                        Form::covector(chart, 3))));
  CHECK_THROWS(exterior_exp(Form::scalar(chart, 1)));
}

TEST_CASE("pullback is dlog linear and functorial") {
  auto a0 = make_elliptic_chart(2, 0, 0);
  auto a1 = make_elliptic_chart(2, 0, 0);
  MonomialMap phi;  // w1 = z1 z2, w2 = z2
  phi.domain = a0;
  phi.codomain = a1;
  phi.r_exp = {{1, 1}, {0, 1}};
  phi.r_scale = {Rational(1), Rational(1)};
  phi.angle_comb = {{1, 1}, {0, 1}};
  Form dlr1 = Form::covector(a1, 0);
  CHECK(pullback(dlr1, phi) ==
        Form::covector(a0, 0) + Form::covector(a0, 2));
  // naturality: pullback commutes with d
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    Form w = rand_mixed_form(a1, rng, 3);
    CHECK(pullback(d(w), phi) == d(pullback(w, phi)));
  }
  // functoriality through compose
  MonomialMap psi = MonomialMap::identity(a1);
  psi.r_scale = {Rational(3), Rational(1, 2)};
  psi.codomain = a1;
  for (int t = 0; t < 10; ++t) {
    Form w = rand_mixed_form(a1, rng, 3);
    CHECK(pullback(pullback(w, psi), phi) == pullback(w, compose(psi, phi)));
  }
}

TEST_CASE("evaluation respects the algebra") {
  auto chart = make_elliptic_chart(2, 0, 1);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    Form a = rand_form(chart, rng, 1);
    Form b = rand_form(chart, rng, 1);
    SamplePoint at = random_sample(*chart, rng);
    auto va = eval_form(a, at);
    auto vb = eval_form(b, at);
    auto vw = eval_form(wedge(a, b), at);
    // degree-1 wedge oracle at the point
    for (const auto& [ma, ca] : va)
      for (const auto& [mb, cb] : vb) {
        if (ma & mb) continue;
        GaussianRational expect = GaussianRational(oracle_sign(ma, mb)) * ca * cb;
        auto it = vw.find(ma | mb);
        GaussianRational got = it == vw.end() ? GaussianRational(0) : it->second;
        // other pairs can contribute to the same mask; only check when unique
        if (mask_degree(ma | mb) == 2 && va.size() == 1 && vb.size() == 1)
          CHECK(got == expect);
      }
  }
}
