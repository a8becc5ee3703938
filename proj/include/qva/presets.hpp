#pragma once

#include "qva/deformation.hpp"

namespace qva {

/// Named example configurations exposed by the CLI.
///  - weyl:        l=1, q=1, p=1
///  - clifford:    l=1, q=-1, p=1
///  - mixed:       l=2, q11=1, q22=-1, q12=i
///  - zf-linear:   l=1, q=-1, p=1+x, order 8
///  - yangian-sl2: the e,f,h exchange table with linear p-factors
inline QSeriesSpec preset(const std::string& name) {
    auto ones = [](int l) {
        return std::vector<std::vector<TruncSeries>>(
            l, std::vector<TruncSeries>(l, TruncSeries::one()));
    };
    QSeriesSpec s;
    if (name == "weyl") {
        s.l = 1;
        s.q = {{Scalar(1)}};
        s.p = ones(1);
    } else if (name == "clifford") {
        s.l = 1;
        s.q = {{Scalar(-1)}};
        s.p = ones(1);
    } else if (name == "mixed") {
        s.l = 2;
        s.q = {{Scalar(1), Scalar::i()}, {-Scalar::i(), Scalar(-1)}};
        s.p = ones(2);
    } else if (name == "zf-linear") {
        s.l = 1;
        s.q = {{Scalar(-1)}};
        s.p = {{TruncSeries::polynomial({Scalar(1), Scalar(1)})}};
        s.order = 8;
    } else if (name == "yangian-sl2") {
        // colors 1=e, 2=f, 3=h
        s.l = 3;
        Scalar one(1), neg(-1);
        s.q = {{neg, one, neg}, {one, neg, neg}, {neg, neg, one}};
        TruncSeries up = TruncSeries::polynomial({Scalar(1), Scalar(1)});   // 1+x
        TruncSeries dn = TruncSeries::polynomial({Scalar(1), Scalar(-1)}); // 1-x
        TruncSeries id = TruncSeries::one();
        s.p = {{up, id, up}, {id, dn, dn}, {up, dn, id}};
    } else {
        throw invalid_parameter("unknown preset '" + name + "'");
    }
    validate_qx(s);
    return s;
}

inline std::vector<std::string> preset_names() {
    return {"weyl", "clifford", "mixed", "zf-linear", "yangian-sl2"};
}

} // namespace qva
