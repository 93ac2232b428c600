// Dense row-major tensor with the time axis last. float for training,
// double for oracle-grade checks.
#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qppg {

template <typename T>
struct Tensor {
    std::vector<int> shape;
    std::vector<T> data;

    Tensor() = default;
    explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
        data.assign(numel_of(shape), T(0));
    }

    static size_t numel_of(const std::vector<int>& s) {
        size_t n = 1;
        for (int e : s) {
            if (e < 0) throw std::invalid_argument("tensor: negative extent");
            n *= static_cast<size_t>(e);
        }
        return n;
    }

    size_t numel() const { return data.size(); }
    int dim(int i) const { return shape[static_cast<size_t>(i)]; }
    int rank() const { return static_cast<int>(shape.size()); }

    // (B,C,T) indexing for the convolutional stage.
    T& at3(int b, int c, int t) {
        return data[(static_cast<size_t>(b) * shape[1] + c) * shape[2] + t];
    }
    T at3(int b, int c, int t) const {
        return data[(static_cast<size_t>(b) * shape[1] + c) * shape[2] + t];
    }
    // (B,F) indexing for the fully-connected stage.
    T& at2(int b, int f) { return data[static_cast<size_t>(b) * shape[1] + f]; }
    T at2(int b, int f) const { return data[static_cast<size_t>(b) * shape[1] + f]; }

    T* row3(int b, int c) { return data.data() + (static_cast<size_t>(b) * shape[1] + c) * shape[2]; }
    const T* row3(int b, int c) const {
        return data.data() + (static_cast<size_t>(b) * shape[1] + c) * shape[2];
    }
    T* row2(int b) { return data.data() + static_cast<size_t>(b) * shape[1]; }
    const T* row2(int b) const { return data.data() + static_cast<size_t>(b) * shape[1]; }
};

}  // namespace qppg
