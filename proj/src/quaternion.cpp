#include "qgg/quaternion.hpp"

namespace qgg {

UnitQuaternion rational_unit_from_vector(const Rational& x, const Rational& y,
                                         const Rational& z) {
    Rational s = x * x + y * y + z * z;
    Rational d = Rational(1) + s;
    Rational two(2);
    return UnitQuaternion(Quaternion((Rational(1) - s) / d, two * x / d, two * y / d,
                                     two * z / d));
}

const std::array<UnitQuaternion, 8>& q8_units() {
    static const std::array<UnitQuaternion, 8> units = {
        UnitQuaternion::unchecked(Quaternion::one()),
        UnitQuaternion::unchecked(-Quaternion::one()),
        UnitQuaternion::unchecked(Quaternion::i()),
        UnitQuaternion::unchecked(-Quaternion::i()),
        UnitQuaternion::unchecked(Quaternion::j()),
        UnitQuaternion::unchecked(-Quaternion::j()),
        UnitQuaternion::unchecked(Quaternion::k()),
        UnitQuaternion::unchecked(-Quaternion::k()),
    };
    return units;
}

std::optional<int> q8_index(const Quaternion& q) {
    const auto& units = q8_units();
    for (int idx = 0; idx < 8; ++idx)
        if (units[idx].value() == q) return idx;
    return std::nullopt;
}

}  // namespace qgg
