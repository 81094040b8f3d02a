#pragma once

#include <span>
#include <vector>

#include "iann/errors.hpp"

namespace iann {

/// Unit counts of a single-hidden-layer network.
struct Topology {
    int n_inputs = 0;
    int n_hidden = 0;
    int n_outputs = 0;

    /// Throws validation_error unless all three counts are >= 1.
    void validate() const;

    bool operator==(const Topology&) const = default;
};

/// Dense row-major matrix. Just enough for the two weight layers.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::span<double> row(int r) { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
    std::span<const double> row(int r) const { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::span<double> flat() { return data_; }
    std::span<const double> flat() const { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// Fully connected feed-forward network with one sigmoid hidden layer and
/// sigmoid outputs.
///
/// Weight layout: w_in(j, i) is the weight from input i into hidden unit j;
/// w_out(y, j) is the weight from hidden unit j into output unit y. Rows are
/// therefore per receiving unit, which keeps the forward-pass dot products
/// contiguous.
struct Network {
    Topology topology;
    Matrix w_in;                       // n_hidden x n_inputs
    std::vector<double> theta_hidden;  // one bias per hidden unit
    Matrix w_out;                      // n_outputs x n_hidden
    std::vector<double> theta_out;     // one bias per output unit

    static Network zeros(const Topology& t);

    /// True when every weight and bias is finite.
    bool all_finite() const;

    bool operator==(const Network&) const = default;
};

/// Every intermediate quantity of one forward pass.
struct Activations {
    std::vector<double> input;
    std::vector<double> hidden_pre;   // sum_i w_in(j,i) * x_i + theta_hidden[j]
    std::vector<double> hidden_post;  // sigmoid(hidden_pre[j])
    std::vector<double> output_pre;   // sum_j w_out(y,j) * hidden_post[j] + theta_out[y]
    std::vector<double> output_post;  // sigmoid(output_pre[y])
};

/// Logistic squashing function 1 / (1 + e^-z).
double sigmoid(double z);

/// sigma'(z) expressed through s = sigmoid(z); equals s * (1 - s).
inline double sigmoid_deriv_from_post(double s) { return s * (1.0 - s); }

/// One forward pass. x must have exactly n_inputs finite entries.
Activations forward(const Network& net, std::span<const double> x);

/// Class decision from output activations: single output thresholds at 0.5
/// (ties to class 1), multiple outputs take the argmax (ties to the lowest
/// index).
int predict_from_outputs(std::span<const double> output_post);

/// forward + predict_from_outputs.
int predict(const Network& net, std::span<const double> x);

}  // namespace iann
