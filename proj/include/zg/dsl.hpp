#pragma once

#include <string>

#include "zg/cuts.hpp"
#include "zg/divisor.hpp"
#include "zg/epseq.hpp"
#include "zg/formula.hpp"
#include "zg/semantics.hpp"
#include "zg/topology.hpp"

namespace zg::dsl {

// Each parser consumes the whole input and throws ParseError on bad syntax.

/// Polynomial in z over Q(i): integers, rationals p/q, i, z, + - * ^, parens.
Poly parse_poly(const std::string& text);
/// Integer-coefficient polynomial in n.
IntPoly parse_int_poly(const std::string& text);
/// Constant of Q(i).
GaussRational parse_gauss(const std::string& text);
/// {point:mult, ...}; points are Q(i) literals.
FiniteDivisor parse_divisor(const std::string& text);
/// tail(p; idx:val, ...) or a bare integer polynomial in n.
EPSeq parse_epseq(const std::string& text);
/// div(p), ann(p), &, +, parens, matrix form E y1..yk : [..]*[[..],..] = x*[..].
PpFormula parse_formula(const std::string& text);
/// E(t,k) or Q.
ModulePoint parse_module_point(const std::string& text);
/// 0, k, above(p), deg(d); bare integers are fixed-tier thresholds unless
/// free_tier is set, in which case they are constant principal generators.
Cut parse_cut(const std::string& text, bool free_tier = false);
/// triple(fixed(t)|free|empty, cut, cut)
AdmissibleTriple parse_triple(const std::string& text);
/// pair(s; s; s; s) with scalars polynomial, divisor (split form) or tail.
BasicOpenPair parse_pair(const std::string& text);

} // namespace zg::dsl
