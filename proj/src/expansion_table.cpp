// SPDX-License-Identifier: Apache-2.0
//
// Series coefficient tables for the ratio cut around the cut (1/2, 1/2, 0)
// of the width-1 parabolic trapezoid, in (q-1/2, p-1/2, theta), stored as
// exact rationals in the order c0, cq, cp, ct, cqq, cqp, cqt, cpp, cpt, ctt.
// Entry values are raw partial derivatives in the parameters (diagonal pairs
// carry d^2/d sigma^2, twice the Taylor coefficient). Every entry is checked
// against quad-precision finite differences by audit_coefficients().
#include "ratiocut/expansion.hpp"

namespace ratiocut {

namespace {

QuadPoly poly(std::array<Rational, 10> c) {
  QuadPoly p;
  p.c0 = c[0];
  p.cq = c[1];
  p.cp = c[2];
  p.ct = c[3];
  p.cqq = c[4];
  p.cqp = c[5];
  p.cqt = c[6];
  p.cpp = c[7];
  p.cpt = c[8];
  p.ctt = c[9];
  return p;
}

}  // namespace

ExpansionTable make_builtin_table() {
  ExpansionTable t;
  using R = Rational;

  t.base_ = poly({R{8}, R{0}, R{0}, R{0}, R{24}, R{-16}, R{4, 3}, R{24}, R{4, 3}, R{7, 18}});

  enum { A1, A2, A3, ET, EB, WL, WR };

  t.first_[A1] = poly({R{-8}, R{8}, R{-8}, R{2, 3}, R{-56}, R{80}, R{0}, R{-56}, R{0}, R{-5, 18}});
  t.first_[A2] = poly({R{-8}, R{-8}, R{8}, R{-2, 3}, R{-56}, R{80}, R{0}, R{-56}, R{0}, R{-5, 18}});
  t.first_[A3] = poly({R{8}, R{-8}, R{8}, R{2, 3}, R{56}, R{-80}, R{0}, R{56}, R{0}, R{5, 18}});
  t.first_[ET] = poly({R{4, 3}, R{0}, R{0}, R{0}, R{52, 3}, R{-40}, R{-8, 9}, R{100, 3}, R{-8, 9}, R{-1, 108}});
  t.first_[EB] = poly({R{-4, 3}, R{0}, R{0}, R{0}, R{-100, 3}, R{40}, R{8, 9}, R{-52, 3}, R{8, 9}, R{1, 108}});
  t.first_[WL] = poly({R{-32}, R{32}, R{32}, R{8, 3}, R{-128}, R{0}, R{-32, 3}, R{-128}, R{-32, 3}, R{-16, 9}});
  t.first_[WR] = poly({R{-32}, R{-32}, R{-32}, R{-8, 3}, R{-128}, R{0}, R{-32, 3}, R{-128}, R{-32, 3}, R{-16, 9}});

  auto set = [&](int i, int j, std::array<Rational, 10> c) {
    if (i > j) std::swap(i, j);
    t.second_[i][j] = poly(c);
  };

  set(A1, A1, {R{20}, R{-32}, R{32}, R{-4, 3}, R{240}, R{-384}, R{4}, R{208}, R{-4}, R{1}});
  set(A1, A2, {R{12}, R{0}, R{0}, R{0}, R{176}, R{-320}, R{-4}, R{208}, R{4}, R{1, 3}});
  set(A1, A3, {R{-12}, R{32}, R{-32}, R{0}, R{-192}, R{320}, R{0}, R{-192}, R{0}, R{-1, 3}});
  set(A2, A2, {R{20}, R{32}, R{-32}, R{4, 3}, R{240}, R{-384}, R{4}, R{208}, R{-4}, R{1}});
  set(A2, A3, {R{-20}, R{0}, R{0}, R{-4, 3}, R{-224}, R{384}, R{0}, R{-224}, R{0}, R{-1}});
  set(A3, A3, {R{20}, R{-32}, R{32}, R{4, 3}, R{208}, R{-384}, R{-4}, R{240}, R{4}, R{1}});

  set(A1, WL, {R{80}, R{-128}, R{-64}, R{-8}, R{512}, R{-256}, R{80, 3}, R{448}, R{32, 3}, R{4}});
  set(A1, WR, {R{48}, R{0}, R{64}, R{-8, 3}, R{256}, R{-256}, R{-16, 3}, R{320}, R{32, 3}, R{4, 3}});
  set(A1, ET, {R{-8, 3}, R{8, 3}, R{-8}, R{-1, 9}, R{-72}, R{464, 3}, R{8, 9}, R{-104}, R{8, 9}, R{-1, 9}});
  set(A1, EB, {R{8, 3}, R{-8, 3}, R{8}, R{1, 9}, R{104}, R{-464, 3}, R{-8, 9}, R{72}, R{-8, 9}, R{1, 9}});

  set(A2, WL, {R{48}, R{0}, R{-64}, R{8, 3}, R{256}, R{-256}, R{-16, 3}, R{320}, R{32, 3}, R{4, 3}});
  set(A2, WR, {R{80}, R{128}, R{64}, R{8}, R{512}, R{-256}, R{80, 3}, R{448}, R{32, 3}, R{4}});
  set(A2, ET, {R{-8, 3}, R{-8, 3}, R{8}, R{1, 9}, R{-72}, R{464, 3}, R{8, 9}, R{-104}, R{8, 9}, R{-1, 9}});
  set(A2, EB, {R{8, 3}, R{8, 3}, R{-8}, R{-1, 9}, R{104}, R{-464, 3}, R{-8, 9}, R{72}, R{-8, 9}, R{1, 9}});

  set(A3, WL, {R{-48}, R{64}, R{0}, R{-8, 3}, R{-320}, R{256}, R{-32, 3}, R{-256}, R{16, 3}, R{-4, 3}});
  set(A3, WR, {R{-80}, R{-64}, R{-128}, R{-8}, R{-448}, R{256}, R{-32, 3}, R{-512}, R{-80, 3}, R{-4}});
  set(A3, ET, {R{8, 3}, R{-8}, R{8, 3}, R{-1, 9}, R{72}, R{-464, 3}, R{-8, 9}, R{104}, R{-8, 9}, R{1, 9}});
  set(A3, EB, {R{-8, 3}, R{8}, R{-8, 3}, R{1, 9}, R{-104}, R{464, 3}, R{8, 9}, R{-72}, R{8, 9}, R{-1, 9}});

  set(WL, WL, {R{256}, R{-512}, R{-512}, R{-128, 3}, R{1536}, R{1024}, R{512, 3}, R{1536}, R{512, 3}, R{160, 9}});
  set(WL, WR, {R{128}, R{0}, R{0}, R{0}, R{512}, R{0}, R{128, 3}, R{512}, R{128, 3}, R{64, 9}});
  set(WR, WR, {R{256}, R{512}, R{512}, R{128, 3}, R{1536}, R{1024}, R{512, 3}, R{1536}, R{512, 3}, R{160, 9}});

  set(WL, ET, {R{-16}, R{32, 3}, R{32, 3}, R{-4, 9}, R{-320, 3}, R{512, 3}, R{32, 9}, R{-512, 3}, R{32, 9}, R{-8, 27}});
  set(WL, EB, {R{16}, R{-32, 3}, R{-32, 3}, R{4, 9}, R{512, 3}, R{-512, 3}, R{-32, 9}, R{320, 3}, R{-32, 9}, R{8, 27}});
  set(WR, ET, {R{-16}, R{-32, 3}, R{-32, 3}, R{4, 9}, R{-320, 3}, R{512, 3}, R{32, 9}, R{-512, 3}, R{32, 9}, R{-8, 27}});
  set(WR, EB, {R{16}, R{32, 3}, R{32, 3}, R{-4, 9}, R{512, 3}, R{-512, 3}, R{-32, 9}, R{320, 3}, R{-32, 9}, R{8, 27}});

  set(ET, ET, {R{0}, R{0}, R{0}, R{0}, R{244, 9}, R{-568, 9}, R{-4, 27}, R{436, 9}, R{-4, 27}, R{5, 162}});
  set(ET, EB, {R{0}, R{0}, R{0}, R{0}, R{-340, 9}, R{568, 9}, R{4, 27}, R{-340, 9}, R{4, 27}, R{-5, 162}});
  set(EB, EB, {R{0}, R{0}, R{0}, R{0}, R{436, 9}, R{-568, 9}, R{-4, 27}, R{244, 9}, R{-4, 27}, R{5, 162}});

  return t;
}

}  // namespace ratiocut
