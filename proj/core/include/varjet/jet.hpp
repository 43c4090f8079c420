#pragma once

#include "varjet/cdiff.hpp"
#include "varjet/expr.hpp"
#include "varjet/horizontal_form.hpp"

namespace varjet {

/// Total derivative D_axis f = df/dx_axis + sum u^k_{sigma+1_axis} df/du^k_sigma,
/// summed over the jet variables actually occurring in f. Interior world.
Expr total_derivative(const Expr& f, int axis);

/// Iterated total derivative D_sigma (order-independent).
Expr total_derivative(const Expr& f, const MultiIndex& sigma);

/// Universal linearization: the operator with coefficient df/du^k_sigma on
/// D_sigma of component k, over the jet variables occurring in f.
CDiffOp linearization(const Expr& f);

/// Evolutionary derivation with generating section psi:
/// sum D_sigma(psi^k) df/du^k_sigma = linearization(f).apply(psi).
Expr evolutionary(const GeneratingSection& psi, const Expr& f);

/// Horizontal differential: degree q -> q+1, inserting D_i with the
/// alternating sign of the insertion position. A top-degree input returns
/// the zero form of top degree (callers treat it as 0).
HorizontalForm horizontal_differential(const HorizontalForm& omega);

}  // namespace varjet
