#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "retriever/error.hpp"

namespace retriever {

// Dense row-major f32 tensor. Copies are shallow (shared storage); tensors
// are treated as immutable after creation except for parameter updates,
// which mutate data() in place under exclusive access.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(std::vector<size_t> shape, bool requires_grad = false);
  static Tensor full(std::vector<size_t> shape, float value,
                     bool requires_grad = false);
  static Tensor from_data(std::vector<size_t> shape, std::vector<float> data,
                          bool requires_grad = false);
  static Tensor scalar(float value, bool requires_grad = false);

  bool defined() const { return storage_ != nullptr; }
  const std::vector<size_t>& shape() const { return storage_->shape; }
  size_t rank() const { return storage_->shape.size(); }
  size_t dim(size_t i) const { return storage_->shape[i]; }
  size_t numel() const { return storage_->data.size(); }

  // Row/column accessors for the common 2-D case.
  size_t rows() const { return storage_->shape[0]; }
  size_t cols() const { return storage_->shape[1]; }

  std::vector<float>& data() { return storage_->data; }
  const std::vector<float>& data() const { return storage_->data; }

  std::vector<float>& grad();
  const std::vector<float>& grad() const;

  bool requires_grad() const {
    return storage_ != nullptr && storage_->requires_grad;
  }
  // Enabling allocates a zero grad buffer; disabling releases it.
  void set_requires_grad(bool value);
  void zero_grad();

  // Value of a one-element tensor.
  float item() const;

  // True when the two handles share storage.
  bool same_storage(const Tensor& other) const {
    return storage_ == other.storage_;
  }

  std::string shape_str() const;

 private:
  struct Storage {
    std::vector<size_t> shape;
    std::vector<float> data;
    std::vector<float> grad;
    bool requires_grad = false;
  };

  std::shared_ptr<Storage> storage_;
};

// Linear record of differentiable operations. Recording order is a valid
// topological order, so the backward pass is a single reverse sweep that
// visits each op exactly once. Gradients accumulate additively; callers zero
// parameter grads between steps. Single-threaded.
class Tape {
 public:
  void record(std::function<void()> backward_fn) {
    ops_.push_back(std::move(backward_fn));
  }

  size_t size() const { return ops_.size(); }

  // Seeds d(loss)/d(loss) = 1 and sweeps the record in reverse.
  // loss must be a scalar produced through ops recorded on this tape.
  void backward(Tensor& loss);

  void clear() { ops_.clear(); }

 private:
  std::vector<std::function<void()>> ops_;
};

// Free-function form of Tape::backward.
void backward(Tape& tape, Tensor& loss);

}  // namespace retriever
