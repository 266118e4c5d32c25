#include "wellcov/verdict.hpp"

#include <string>

namespace wellcov {

std::string ClassQuery::to_string() const {
    switch (kind) {
        case Kind::WellCovered: return "well-covered";
        case Kind::Wk: return "wk:" + std::to_string(parameter);
        case Kind::KExtendable: return "extendable:" + std::to_string(parameter);
        case Kind::Es: return "es:" + std::to_string(parameter);
        case Kind::BGraph: return "b-graph";
        case Kind::Shedding: return "shedding:" + std::to_string(parameter);
    }
    return "?";
}

}  // namespace wellcov
