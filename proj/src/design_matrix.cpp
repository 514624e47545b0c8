#include "epss/design_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace epss {

DesignMatrix build_design_matrix(const std::vector<LabeledInstance>& instances,
                                 const std::vector<std::string>& feature_names,
                                 RefTransform ref_transform) {
    if (instances.empty()) throw std::invalid_argument("design matrix: no instances");
    const long n = long(instances.size());
    const long p = long(feature_names.size());

    DesignMatrix m;
    m.feature_names = feature_names;
    m.ref_transform = ref_transform;
    m.x.resize(n, p);
    m.y.resize(n);

    for (long i = 0; i < n; ++i) {
        const auto& inst = instances[i];
        m.y[i] = inst.exploited ? 1.0 : 0.0;
        const NamedValues values = named_values(inst.features);
        for (long j = 0; j < p; ++j) {
            const double* v = find_value(values, feature_names[j]);
            if (!v)
                throw std::invalid_argument("design matrix: instance " + inst.cve_id +
                                            " lacks feature '" + feature_names[j] + "'");
            double x = *v;
            if (feature_names[j] == "ref_count" && ref_transform == RefTransform::log1p_natural) {
                if (x < 0) throw std::invalid_argument("design matrix: negative ref_count");
                x = std::log1p(x);
            }
            m.x(i, j) = x;
        }
    }

    const double pos = m.y.sum();
    if (pos == 0.0 || pos == double(n))
        throw std::invalid_argument("design matrix: labels contain a single class");

    m.mean.resize(p);
    m.sd.resize(p);
    for (long j = 0; j < p; ++j) {
        m.mean[j] = m.x.col(j).mean();
        const double var = (m.x.col(j).array() - m.mean[j]).square().sum() / double(n);
        m.sd[j] = std::sqrt(var);
        if (m.sd[j] == 0.0)
            throw std::invalid_argument("design matrix: column '" + feature_names[j] +
                                        "' is constant");
    }
    return m;
}

} // namespace epss
