#pragma once

// Frozen display values for the one-parameter specialization
// u = (1,2,3,4,5,6,x,1/(720x)), entered as factored expressions and
// expanded through exact field arithmetic.

#include <cstdint>
#include <vector>

#include "e7tensor/field.hpp"

namespace golden {

using e7tensor::FieldElement;
using e7tensor::Int;
using e7tensor::Rational;

inline FieldElement x() { return FieldElement::indeterminate(); }

inline FieldElement q(long num, long den = 1) { return FieldElement(Rational(num, den)); }

inline FieldElement big(const char* digits) { return FieldElement(Rational(Int(digits))); }

inline FieldElement pow2(int e) { return q(2).pow(e); }

// c0 + c1 x + ... over (scale * x^xpow), with big-integer coefficients.
inline FieldElement poly_over(const std::vector<FieldElement>& coeffs, FieldElement scale,
                              int xpow) {
  FieldElement acc = q(0);
  for (size_t k = 0; k < coeffs.size(); ++k) acc = acc + coeffs[k] * x().pow(k);
  return acc / (scale * x().pow(xpow));
}

// A(rho_A7) = -1/(2^20 3^11 5^6 x^7) (x-1)...(x-6) (720x-1)...(4320x-1) (720x^2-1)
inline FieldElement a_rho_a7() {
  FieldElement v = q(-1) / (pow2(20) * q(3).pow(11) * q(5).pow(6) * x().pow(7));
  for (int k = 1; k <= 6; ++k) v = v * (x() - q(k));
  for (int k = 1; k <= 6; ++k) v = v * (q(720 * k) * x() - q(1));
  v = v * (q(720) * x() * x() - q(1));
  return v;
}

// The factored polynomial displayed for the E7 denominator. As printed it
// equals A(rho_E7) / A(rho_A7); the test suite checks that identity.
inline FieldElement e7_denominator_display() {
  FieldElement v =
      q(-1) * q(7).pow(3) * q(11) * q(13).pow(2) * q(17).pow(2) * q(23) * q(29) * q(47) *
      q(59).pow(2) * q(71) * q(89) * q(179) * q(239) * q(359) /
      (pow2(40) * q(3).pow(19) * q(5).pow(9) * x().pow(10));
  for (int k : {6, 8, 10, 12, 12, 15, 18, 20, 24, 24, 30, 30, 36, 40, 48, 60, 60, 72, 90, 120})
    v = v * (q(k) * x() - q(1));
  return v;
}

// ch of the 56-dimensional fundamental representation (label vector
// (1,0,0,0,0,0,0)).
inline FieldElement ch_56() {
  return poly_over({q(3 * 7 * 17), q(5 * 25841), pow2(4) * q(27) * q(5 * 7 * 17)}, q(144), 1);
}

// ch of the 912-dimensional fundamental representation (0,0,0,0,0,0,1).
inline FieldElement ch_912() {
  return poly_over(
      {
          q(5 * 25841),
          q(3 * 7 * 19 * 83 * 2459),
          pow2(2) * q(3).pow(3) * q(7).pow(2) * q(17 * 45307),
          pow2(4) * q(3).pow(3) * q(5 * 7 * 19 * 83) * q(2459),
          pow2(8) * q(3).pow(4) * q(5).pow(3) * q(25841),
      },
      pow2(8) * q(3).pow(4) * q(5), 2);
}

// ch of the 27664-dimensional representation (0,0,1,0,0,0,0).
inline FieldElement ch_27664() {
  return poly_over(
      {
          q(3 * 7 * 41) * q(13469),
          q(5) * q(25841) * q(172357),
          pow2(2) * q(3 * 7 * 17 * 151 * 229) * q(76837),
          pow2(2) * q(9 * 13 * 41) * big("8271569177"),
          pow2(6) * q(27) * q(5 * 7 * 17 * 151 * 229) * q(76837),
          pow2(8) * q(81) * q(125) * q(25841) * q(172357),
          pow2(12) * q(3).pow(7) * q(125) * q(7 * 41) * q(13469),
      },
      pow2(12) * q(3).pow(6) * q(25) / q(7), 3);
}

// ch of the 365750-dimensional representation (0,0,0,1,0,0,0).
inline FieldElement ch_365750() {
  return poly_over(
      {
          pow2(2) * q(7 * 29 * 31 * 113) * q(25849),
          q(3) * q(125) * q(49) * q(41) * q(13469) * q(25841),
          pow2(2) * q(49) * q(227 * 1997) * big("1004276389"),
          pow2(2) * q(81) * q(25) * q(7).pow(4) * q(17 * 41) * q(13469) * q(45307),
          pow2(7) * q(9) * big("266944787316406807"),
          pow2(6) * q(3).pow(6) * q(125) * q(7).pow(4) * q(17 * 41) * q(13469) * q(45307),
          pow2(10) * q(81) * q(25) * q(49) * q(227 * 1997) * big("1004276389"),
          pow2(12) * q(3).pow(7) * q(5).pow(6) * q(49) * q(41) * q(13469) * q(25841),
          pow2(18) * q(3).pow(8) * q(5).pow(4) * q(7 * 29 * 31 * 113) * q(25849),
      },
      pow2(16) * q(3).pow(8) * q(5).pow(4), 4);
}

// ch of the product representation's top constituent (0,0,1,1,0,0,0).
inline FieldElement ch_top_pair() {
  return poly_over(
      {
          pow2(5) * q(49) * q(139) * q(40819) * big("22523219"),
          q(3) * big("296955329011336071883"),
          q(7) * q(93629) * q(104327) * big("20612147800357"),
          pow2(2) * q(7 * 89 * 509) * big("407193532921684756441"),
          pow2(2) * q(7 * 19 * 1447) * big("73091587") * big("1489316745532201"),
          pow2(4) * q(3) * q(121) * q(37 * 1117) * big("18045889") * big("1661840436868789"),
          pow2(4) * q(9 * 7) * q(121) * q(5237) * q(130069) * q(351401) * big("12440163841487"),
          pow2(9) * q(27) * q(11 * 83 * 757) * big("4830390973") * big("258355213888973"),
          pow2(8) * q(81 * 5 * 7) * q(121) * q(5237) * q(130069) * q(351401) *
              big("12440163841487"),
          pow2(12) * q(3).pow(5) * q(25) * q(121) * q(37 * 1117) * big("18045889") *
              big("1661840436868789"),
          pow2(14) * q(3).pow(6) * q(125) * q(7 * 19 * 1447) * big("73091587") *
              big("1489316745532201"),
          pow2(18) * q(3).pow(8) * q(5).pow(4) * q(7 * 89 * 509) * big("407193532921684756441"),
          pow2(20) * q(3).pow(10) * q(5).pow(5) * q(7) * q(93629) * q(104327) *
              big("20612147800357"),
          pow2(24) * q(3).pow(13) * q(5).pow(6) * big("296955329011336071883"),
          pow2(33) * q(3).pow(14) * q(5).pow(7) * q(49) * q(139) * q(40819) * big("22523219"),
      },
      pow2(28) * q(3).pow(13) * q(5).pow(6) / q(7), 7);
}

}  // namespace golden
