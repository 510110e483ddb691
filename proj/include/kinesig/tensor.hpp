#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace kinesig {

namespace detail {

struct TensorNode {
    std::vector<std::size_t> shape;
    std::vector<double> value;
    std::vector<double> grad;  // empty until backward needs it
    bool requires_grad = false;
    std::uint64_t tape_id = 0;  // tape that produced this node; 0 = leaf
};

}  // namespace detail

std::size_t shape_numel(const std::vector<std::size_t>& shape);
std::string shape_str(const std::vector<std::size_t>& shape);

// Throws RuntimeFailure naming `op` if any element is NaN or Inf.
void check_finite(const char* op, const double* x, std::size_t n);

// Dense row-major 64-bit tensor. Copying a Tensor copies the handle; the
// underlying buffer is shared, which is what lets parameters keep identity
// across forward passes and lets the tape hold activations alive.
class Tensor {
public:
    Tensor() = default;

    static Tensor zeros(std::vector<std::size_t> shape, bool requires_grad = false);
    static Tensor full(std::vector<std::size_t> shape, double v, bool requires_grad = false);
    static Tensor from_data(std::vector<std::size_t> shape, std::vector<double> data,
                            bool requires_grad = false);
    static Tensor scalar(double v, bool requires_grad = false);

    bool defined() const { return node_ != nullptr; }
    const std::vector<std::size_t>& shape() const { return node_->shape; }
    std::size_t rank() const { return node_->shape.size(); }
    std::size_t dim(std::size_t i) const { return node_->shape[i]; }
    std::size_t numel() const { return node_->value.size(); }

    double* data() { return node_->value.data(); }
    const double* data() const { return node_->value.data(); }
    std::vector<double>& values() { return node_->value; }
    const std::vector<double>& values() const { return node_->value; }

    bool requires_grad() const { return node_->requires_grad; }
    bool has_grad() const { return !node_->grad.empty(); }
    // Zero-filled on first access.
    std::vector<double>& grad();
    const std::vector<double>& grad() const;
    void zero_grad();

    double item() const;                               // scalar tensors only
    double at(std::initializer_list<std::size_t>) const;  // convenience for tests

    std::shared_ptr<detail::TensorNode>& node() { return node_; }
    const std::shared_ptr<detail::TensorNode>& node() const { return node_; }

private:
    explicit Tensor(std::shared_ptr<detail::TensorNode> n) : node_(std::move(n)) {}
    std::shared_ptr<detail::TensorNode> node_;
};

}  // namespace kinesig
