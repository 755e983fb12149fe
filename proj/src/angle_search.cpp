#include "xsb/ladder.hpp"

#include "xsb/error.hpp"

#include <algorithm>

namespace xsb {

AngleSearchResult search_angle_params(const NullFormEstimate& n, int grid_denominator) {
    if (grid_denominator < 1) throw DomainError("grid denominator must be at least 1");

    const Exponent zero(0), half(q(1, 2));
    std::vector<Exponent> values;
    auto add = [&](const Exponent& v) {
        if (v >= zero && v <= half) values.push_back(v);
    };
    for (int k = 0; k <= grid_denominator / 2; ++k) {
        Exponent v(q(k, grid_denominator));
        add(v);
        add(v - Exponent::eps(1));
        add(v - Exponent::eps(2));
    }
    add(n.factor1.b);
    add(n.factor2.b);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    AngleSearchResult result;
    result.values = values;
    for (const auto& a : values) {
        for (const auto& b : values) {
            for (const auto& c : values) {
                ++result.scanned;
                AngleParams p(a, b, c);
                try {
                    NullFormCertificate cert = verify_nullform_estimate(n, p);
                    if (cert.holds) {
                        result.params = p;
                        result.certificate = std::move(cert);
                        return result;
                    }
                } catch (const Rejected&) {
                }
            }
        }
    }
    return result;
}

} // namespace xsb
