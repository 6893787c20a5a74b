#include "hvb/basis.hpp"

namespace hvb {

std::string family_name(Family f)
{
    switch (f) {
    case Family::L: return "L";
    case Family::I: return "I";
    case Family::Y: return "Y";
    case Family::E: return "E";
    case Family::CL: return "CL";
    case Family::CI: return "CI";
    case Family::CLI: return "CLI";
    case Family::C: return "C";
    }
    return "?";
}

std::string to_string(const BasisVector& b)
{
    switch (b.family) {
    case Family::L:
    case Family::I:
    case Family::Y:
        return family_name(b.family) + "[" + std::to_string(b.i) + "]";
    case Family::E:
        return "E[" + std::to_string(b.i) + "," + std::to_string(b.j) + "]";
    default:
        return family_name(b.family);
    }
}

}  // namespace hvb
