#include "retriever/tensor.hpp"

#include <sstream>

namespace retriever {

namespace {

size_t shape_numel(const std::vector<size_t>& shape) {
  size_t n = 1;
  for (const size_t d : shape) {
    if (d == 0) {
      throw ShapeError("tensor shape has a zero dimension");
    }
    n *= d;
  }
  return n;
}

}  // namespace

Tensor Tensor::zeros(std::vector<size_t> shape, bool requires_grad) {
  Tensor t;
  const size_t n = shape_numel(shape);
  t.storage_ = std::make_shared<Storage>();
  t.storage_->shape = std::move(shape);
  t.storage_->data.assign(n, 0.0f);
  t.storage_->requires_grad = requires_grad;
  if (requires_grad) t.storage_->grad.assign(n, 0.0f);
  return t;
}

Tensor Tensor::full(std::vector<size_t> shape, float value, bool requires_grad) {
  Tensor t = zeros(std::move(shape), requires_grad);
  for (float& v : t.data()) v = value;
  return t;
}

Tensor Tensor::from_data(std::vector<size_t> shape, std::vector<float> data,
                         bool requires_grad) {
  const size_t n = shape_numel(shape);
  if (n != data.size()) {
    std::ostringstream msg;
    msg << "tensor data length " << data.size()
        << " does not match shape product " << n;
    throw ShapeError(msg.str());
  }
  Tensor t;
  t.storage_ = std::make_shared<Storage>();
  t.storage_->shape = std::move(shape);
  t.storage_->data = std::move(data);
  t.storage_->requires_grad = requires_grad;
  if (requires_grad) t.storage_->grad.assign(n, 0.0f);
  return t;
}

Tensor Tensor::scalar(float value, bool requires_grad) {
  return from_data({1}, {value}, requires_grad);
}

std::vector<float>& Tensor::grad() {
  if (!requires_grad()) {
    throw ContractError("tensor has no gradient buffer (requires_grad is off)");
  }
  return storage_->grad;
}

const std::vector<float>& Tensor::grad() const {
  if (!requires_grad()) {
    throw ContractError("tensor has no gradient buffer (requires_grad is off)");
  }
  return storage_->grad;
}

void Tensor::set_requires_grad(bool value) {
  if (!storage_) throw ContractError("set_requires_grad on an empty tensor");
  storage_->requires_grad = value;
  if (value) {
    storage_->grad.assign(storage_->data.size(), 0.0f);
  } else {
    storage_->grad.clear();
    storage_->grad.shrink_to_fit();
  }
}

void Tensor::zero_grad() {
  if (requires_grad()) {
    storage_->grad.assign(storage_->data.size(), 0.0f);
  }
}

float Tensor::item() const {
  if (!storage_ || storage_->data.size() != 1) {
    throw ContractError("item() requires a one-element tensor, got shape " +
                        shape_str());
  }
  return storage_->data[0];
}

std::string Tensor::shape_str() const {
  if (!storage_) return "[]";
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < storage_->shape.size(); ++i) {
    if (i) out << "x";
    out << storage_->shape[i];
  }
  out << "]";
  return out.str();
}

void Tape::backward(Tensor& loss) {
  if (!loss.defined() || loss.numel() != 1) {
    throw ContractError("backward requires a scalar loss, got shape " +
                        loss.shape_str());
  }
  if (!loss.requires_grad()) {
    throw ContractError(
        "backward requires a loss produced through recorded ops");
  }
  loss.grad()[0] += 1.0f;
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    (*it)();
  }
}

void backward(Tape& tape, Tensor& loss) { tape.backward(loss); }

}  // namespace retriever
