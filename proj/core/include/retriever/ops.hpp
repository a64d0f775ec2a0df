#pragma once

#include <cstdint>
#include <vector>

#include "retriever/rng.hpp"
#include "retriever/tensor.hpp"

namespace retriever {

// Epsilon added inside the square root of layer_norm.
inline constexpr float kLayerNormEpsilon = 1e-5f;

// Additive pre-softmax value for disallowed attention positions. exp of
// (kMaskedScore - row_max) underflows to exactly +0, so masked positions
// contribute nothing, bit for bit.
inline constexpr float kMaskedScore = -1e9f;

// Every op validates shapes, computes the forward value, checks the result
// for NaN/Inf, and (when `tape` is non-null and an input requires grad)
// records a backward closure on the tape. Passing tape == nullptr runs the
// op in inference mode.

// [m x k] by [k x n] -> [m x n].
Tensor matmul(Tape* tape, const Tensor& a, const Tensor& b);

// 2-D transpose.
Tensor transpose(Tape* tape, const Tensor& a);

// Elementwise; shapes must match.
Tensor add(Tape* tape, const Tensor& a, const Tensor& b);
Tensor mul(Tape* tape, const Tensor& a, const Tensor& b);

// x [m x n] + bias [n], broadcast over rows.
Tensor add_bias(Tape* tape, const Tensor& x, const Tensor& bias);

Tensor scale(Tape* tape, const Tensor& a, float factor);

// Max-subtracted softmax along `axis` (negative counts from the back).
Tensor softmax(Tape* tape, const Tensor& x, int axis = -1);

// Normalizes each slice along the last axis to mean 0 / variance 1, then
// applies gain and bias (both of last-axis width).
Tensor layer_norm(Tape* tape, const Tensor& x, const Tensor& gain,
                  const Tensor& bias, float epsilon = kLayerNormEpsilon);

// Exact (erf-based) GELU.
Tensor gelu(Tape* tape, const Tensor& x);

Tensor sigmoid(Tape* tape, const Tensor& x);

// Gathers rows of `table` [V x D] at `ids` -> [ids.size() x D].
Tensor embedding_rows(Tape* tape, const Tensor& table,
                      const std::vector<int>& ids);

Tensor slice_cols(Tape* tape, const Tensor& x, size_t start, size_t width);
Tensor concat_cols(Tape* tape, const std::vector<Tensor>& parts);
Tensor concat_rows(Tape* tape, const std::vector<Tensor>& parts);

// Zeroes rows where keep[i] == 0 (output masking for padded positions).
Tensor zero_rows(Tape* tape, const Tensor& x, const std::vector<uint8_t>& keep);

// Sum of all elements -> scalar.
Tensor sum(Tape* tape, const Tensor& x);

// Mean negative log-softmax probability of `targets` over the rows whose
// target differs from `ignore_index`. All positions ignored -> 0 with zero
// gradient. Targets must be < V or equal ignore_index.
Tensor cross_entropy(Tape* tape, const Tensor& logits,
                     const std::vector<int>& targets, int ignore_index);

// Inverted dropout: keeps with probability 1-rate and rescales by
// 1/(1-rate). rate <= 0 is the identity; rate must be < 1.
Tensor dropout(Tape* tape, const Tensor& x, float rate, Rng& rng);

// Throws NumericError if any element is NaN/Inf.
void ensure_all_finite(const Tensor& t, const char* op_name);

}  // namespace retriever
