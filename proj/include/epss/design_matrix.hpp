#pragma once

#include "epss/dataset.hpp"
#include "epss/model.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace epss {

// Instances laid out for fitting. Column values are already transformed
// (ln(x+1) for ref_count, raw 0/1 for flags); means and population standard
// deviations are kept for standardization during penalized fits.
struct DesignMatrix {
    std::vector<std::string> feature_names;
    Eigen::MatrixXd x; // n rows, one column per feature
    Eigen::VectorXd y; // 0/1 labels
    Eigen::VectorXd mean;
    Eigen::VectorXd sd;
    RefTransform ref_transform = RefTransform::log1p_natural;

    long rows() const { return x.rows(); }
    long cols() const { return x.cols(); }
    double positive_rate() const { return y.size() ? y.mean() : 0.0; }
};

// Throws std::invalid_argument when labels are single-class or any selected
// column is constant.
DesignMatrix build_design_matrix(const std::vector<LabeledInstance>& instances,
                                 const std::vector<std::string>& feature_names,
                                 RefTransform ref_transform = RefTransform::log1p_natural);

} // namespace epss
