#pragma once

#include "levylab/levy_model.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace testmodels {

using namespace levylab;

inline LevyModel bs() { return LevyModel(0.05, 0.0, 0.2); }
inline LevyModel kou_bm() { return LevyModel(0.05, 0.0, 0.2, {jumps::Kou{0.1, 20.0, 1.0, 10.0}, {}}); }
inline LevyModel kou_neg() { return LevyModel(0.05, 0.04, 0.2, {jumps::Kou{0.5, 5.0, 0.5, 8.0}, {}}); }
inline LevyModel merton_bm() { return LevyModel(0.05, 0.0, 0.2, {jumps::Merton{1.0, -0.1, 0.15}, {}}); }
inline LevyModel vg() { return LevyModel(0.05, 0.0, 0.0, {jumps::VarianceGamma{1.0, 10.0, 10.0}, {}}); }
inline LevyModel cgmy_bm() {
    return LevyModel(0.05, 0.0, 0.2, {jumps::TemperedStable{0.0, 0.1, 5.0, 10.0, 0.5, 1.5}, {}});
}
inline LevyModel cgmy_half() {
    return LevyModel(0.05, 0.0, 0.0, {jumps::TemperedStable{0.5, 0.5, 5.0, 10.0, 0.5, 0.5}, {}});
}
inline LevyModel atom_model() {
    return LevyModel(0.05, 0.05, 0.2, {jumps::None{}, {{std::log(2.0), 0.05}}});
}
inline LevyModel finite() {
    return LevyModel(0.05, 0.0, 0.2, {jumps::FiniteActivity{1.0, {{-0.2, 0.5}, {0.1, 0.5}}}, {}});
}

struct Named {
    std::string name;
    LevyModel model;
};

inline std::vector<Named> zoo() {
    return {{"bs", bs()},           {"kou_bm", kou_bm()},       {"kou_neg", kou_neg()},
            {"merton_bm", merton_bm()}, {"vg", vg()},           {"cgmy_bm", cgmy_bm()},
            {"cgmy_half", cgmy_half()}, {"atom", atom_model()}, {"finite", finite()}};
}

}  // namespace testmodels
