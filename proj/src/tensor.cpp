#include "kinesig/tensor.hpp"

#include <cmath>
#include <sstream>

#include "kinesig/error.hpp"

namespace kinesig {

std::size_t shape_numel(const std::vector<std::size_t>& shape) {
    if (shape.empty()) throw ValidationError("tensor shape must have at least one extent");
    std::size_t n = 1;
    for (std::size_t e : shape) {
        if (e == 0) throw ValidationError("tensor extents must be positive, got shape " + shape_str(shape));
        n *= e;
    }
    return n;
}

std::string shape_str(const std::vector<std::size_t>& shape) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "x" : "") << shape[i];
    os << "]";
    return os.str();
}

void check_finite(const char* op, const double* x, std::size_t n) {
    bool ok = true;
#pragma omp parallel for reduction(&& : ok) schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        ok = ok && std::isfinite(x[i]);
    }
    if (!ok) {
        throw RuntimeFailure(std::string("non-finite value produced by op '") + op + "'");
    }
}

Tensor Tensor::zeros(std::vector<std::size_t> shape, bool requires_grad) {
    auto n = std::make_shared<detail::TensorNode>();
    const std::size_t count = shape_numel(shape);
    n->shape = std::move(shape);
    n->value.assign(count, 0.0);
    n->requires_grad = requires_grad;
    return Tensor(std::move(n));
}

Tensor Tensor::full(std::vector<std::size_t> shape, double v, bool requires_grad) {
    Tensor t = zeros(std::move(shape), requires_grad);
    for (double& x : t.node()->value) x = v;
    return t;
}

Tensor Tensor::from_data(std::vector<std::size_t> shape, std::vector<double> data,
                         bool requires_grad) {
    const std::size_t count = shape_numel(shape);
    if (count != data.size()) {
        throw ValidationError("tensor shape " + shape_str(shape) + " needs " + std::to_string(count) +
                              " values, got " + std::to_string(data.size()));
    }
    auto n = std::make_shared<detail::TensorNode>();
    n->shape = std::move(shape);
    n->value = std::move(data);
    n->requires_grad = requires_grad;
    return Tensor(std::move(n));
}

Tensor Tensor::scalar(double v, bool requires_grad) {
    return from_data({1}, {v}, requires_grad);
}

std::vector<double>& Tensor::grad() {
    if (node_->grad.empty()) node_->grad.assign(node_->value.size(), 0.0);
    return node_->grad;
}

const std::vector<double>& Tensor::grad() const {
    if (node_->grad.empty()) {
        throw RuntimeFailure("gradient read before any backward pass populated it");
    }
    return node_->grad;
}

void Tensor::zero_grad() {
    if (!node_->grad.empty()) node_->grad.assign(node_->value.size(), 0.0);
}

double Tensor::item() const {
    if (numel() != 1) throw ValidationError("item() requires a scalar, got shape " + shape_str(shape()));
    return node_->value[0];
}

double Tensor::at(std::initializer_list<std::size_t> idx) const {
    if (idx.size() != rank()) throw ValidationError("index rank mismatch in at()");
    std::size_t flat = 0;
    std::size_t i = 0;
    for (std::size_t v : idx) {
        if (v >= node_->shape[i]) throw ValidationError("index out of range in at()");
        flat = flat * node_->shape[i] + v;
        ++i;
    }
    return node_->value[flat];
}

}  // namespace kinesig
