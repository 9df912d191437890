#include "betticone/error.hpp"

namespace betticone {

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::negative_entry: return "NegativeEntry";
    case errc::broken_chain: return "BrokenChain";
    case errc::empty_table: return "EmptyTable";
    case errc::not_cm_consistent: return "NotCohenMacaulayConsistent";
    case errc::invalid_n: return "InvalidN";
    case errc::not_in_cone: return "NotInCone";
    case errc::not_dual_closed: return "NotDualClosed";
    case errc::empty_decomposition: return "EmptyDecomposition";
    case errc::non_zero_start: return "NonZeroStart";
    case errc::not_degree_zero_generated: return "NotDegreeZeroGenerated";
    case errc::not_quasi_pure: return "NotQuasiPure";
    case errc::not_codim_three: return "NotCodimThree";
    case errc::not_cyclic: return "NotCyclic";
    case errc::no_such_degree: return "NoSuchDegree";
    case errc::syntax_error: return "SyntaxError";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace betticone
