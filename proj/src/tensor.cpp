#include "son/tensor.hpp"

#include <cmath>
#include <sstream>

namespace son {

void fail(const std::string& msg) { throw Error(msg); }

std::size_t shape_product(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t e : shape) n *= e;
    return n;
}

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(shape_product(shape_), 0.0) {
    for (std::size_t e : shape_)
        if (e == 0) fail("Tensor: zero extent in shape");
}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != shape_product(shape_))
        fail("Tensor: data length " + std::to_string(data_.size()) +
             " does not match shape product " + std::to_string(shape_product(shape_)));
}

Tensor::Tensor(std::initializer_list<double> values)
    : shape_{values.size()}, data_(values) {}

Tensor Tensor::zeros(std::vector<std::size_t> shape) { return Tensor(std::move(shape)); }

Tensor Tensor::full(std::vector<std::size_t> shape, double value) {
    Tensor t(std::move(shape));
    for (auto& x : t.data_) x = value;
    return t;
}

Tensor Tensor::identity(std::size_t n) {
    Tensor t({n, n});
    for (std::size_t i = 0; i < n; ++i) t.data_[i * n + i] = 1.0;
    return t;
}

Tensor Tensor::scalar(double value) {
    Tensor t({1});
    t.data_[0] = value;
    return t;
}

std::size_t Tensor::extent(std::size_t axis) const {
    if (axis >= shape_.size()) fail("Tensor::extent: axis out of range");
    return shape_[axis];
}

namespace {
std::size_t flat_index(const std::vector<std::size_t>& shape,
                       std::initializer_list<std::size_t> idx) {
    if (idx.size() != shape.size()) fail("Tensor::at: rank mismatch");
    std::size_t flat = 0;
    std::size_t axis = 0;
    for (std::size_t i : idx) {
        if (i >= shape[axis]) fail("Tensor::at: index out of range");
        flat = flat * shape[axis] + i;
        ++axis;
    }
    return flat;
}
}  // namespace

double& Tensor::at(std::initializer_list<std::size_t> idx) {
    return data_[flat_index(shape_, idx)];
}

double Tensor::at(std::initializer_list<std::size_t> idx) const {
    return data_[flat_index(shape_, idx)];
}

Tensor Tensor::reshaped(std::vector<std::size_t> shape) const {
    if (shape_product(shape) != data_.size())
        fail("Tensor::reshaped: element count mismatch");
    Tensor t;
    t.shape_ = std::move(shape);
    t.data_ = data_;
    return t;
}

std::string Tensor::shape_str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < shape_.size(); ++i)
        os << (i ? "," : "") << shape_[i];
    os << ']';
    return os.str();
}

const Tensor& Tensor::ensure_finite(const char* what) const {
    for (double x : data_)
        if (!std::isfinite(x)) fail(std::string(what) + ": non-finite entry");
    return *this;
}

namespace {
void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
    if (!a.same_shape(b))
        fail(std::string(op) + ": shape mismatch " + a.shape_str() + " vs " + b.shape_str());
}
}  // namespace

Tensor add(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "add");
    Tensor out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    out.ensure_finite("add");
    return out;
}

Tensor sub(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "sub");
    Tensor out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    out.ensure_finite("sub");
    return out;
}

Tensor scale(const Tensor& a, double s) {
    Tensor out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= s;
    out.ensure_finite("scale");
    return out;
}

Tensor neg(const Tensor& a) { return scale(a, -1.0); }

Tensor hadamard(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "hadamard");
    Tensor out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= b[i];
    out.ensure_finite("hadamard");
    return out;
}

void add_inplace(Tensor& a, const Tensor& b, double s) {
    require_same_shape(a, b, "add_inplace");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2) fail("matmul: both operands must be 2-D");
    const std::size_t m = a.extent(0), k = a.extent(1);
    const std::size_t k2 = b.extent(0), n = b.extent(1);
    if (k != k2)
        fail("matmul: inner extents differ, " + a.shape_str() + " vs " + b.shape_str());
    Tensor out({m, n});
    const double* pa = a.data();
    const double* pb = b.data();
    double* po = out.data();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t kk = 0; kk < k; ++kk) {
            const double aik = pa[i * k + kk];
            if (aik == 0.0) continue;
            const double* prow = pb + kk * n;
            double* porow = po + i * n;
            for (std::size_t j = 0; j < n; ++j) porow[j] += aik * prow[j];
        }
    }
    out.ensure_finite("matmul");
    return out;
}

Tensor transpose(const Tensor& a) {
    if (a.rank() != 2) fail("transpose: 2-D only");
    const std::size_t m = a.extent(0), n = a.extent(1);
    Tensor out({n, m});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) out[j * m + i] = a[i * n + j];
    return out;
}

double reduce_mean(const Tensor& a) {
    if (a.empty()) fail("reduce_mean: empty tensor");
    return reduce_sum(a) / static_cast<double>(a.size());
}

double reduce_sum(const Tensor& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i];
    if (!std::isfinite(s)) fail("reduce_sum: non-finite result");
    return s;
}

double dot(const Tensor& a, const Tensor& b) {
    if (a.size() != b.size()) fail("dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    if (!std::isfinite(s)) fail("dot: non-finite result");
    return s;
}

double max_abs(const Tensor& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
    return m;
}

}  // namespace son
