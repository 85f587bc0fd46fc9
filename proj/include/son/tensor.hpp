#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace son {

/// Error type thrown by every public operation in this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] void fail(const std::string& msg);

/// Dense row-major tensor of 64-bit reals. Immutable by convention once it
/// leaves a producing operation; in-place mutation is reserved for owners
/// (gradient accumulation, optimizer state).
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape);
    Tensor(std::vector<std::size_t> shape, std::vector<double> data);
    Tensor(std::initializer_list<double> values);  // 1-D convenience

    static Tensor zeros(std::vector<std::size_t> shape);
    static Tensor full(std::vector<std::size_t> shape, double value);
    static Tensor identity(std::size_t n);
    static Tensor scalar(double value);  // shape [1]

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t extent(std::size_t axis) const;
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    double& at(std::initializer_list<std::size_t> idx);
    double at(std::initializer_list<std::size_t> idx) const;

    /// Same data, new shape; element count must match.
    Tensor reshaped(std::vector<std::size_t> shape) const;

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
    std::string shape_str() const;

    /// Throws if any entry is NaN or Inf. `what` names the producing op.
    const Tensor& ensure_finite(const char* what) const;

private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

std::size_t shape_product(const std::vector<std::size_t>& shape);

// Elementwise and reduction kernels. Shapes must conform exactly unless noted.
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);
Tensor neg(const Tensor& a);
Tensor hadamard(const Tensor& a, const Tensor& b);
void add_inplace(Tensor& a, const Tensor& b, double s = 1.0);

/// matmul(a [m,k], b [k,n]) -> [m,n]. 2-D only.
Tensor matmul(const Tensor& a, const Tensor& b);
/// transpose of a 2-D tensor.
Tensor transpose(const Tensor& a);

/// Mean over all entries.
double reduce_mean(const Tensor& a);
/// Sum over all entries.
double reduce_sum(const Tensor& a);
/// Dot product of equally sized tensors (flat).
double dot(const Tensor& a, const Tensor& b);
double max_abs(const Tensor& a);

}  // namespace son
