#pragma once

#include <string>
#include <vector>

#include "qcorr/qstate.hpp"
#include "qcorr/stateio.hpp"

namespace qcorr {

class UnknownState : public Error {
 public:
  explicit UnknownState(const std::string& what) : Error(what) {}
};

/// (|00> + |01> - |10> + |11>)/2: maximally coherent and maximally entangled.
PureState coherent_entangled_pair();

/// (|00> + |11>)/sqrt(2).
PureState bell_state();

/// |+> (x) |+>: maximally coherent product state.
PureState plus_product();

/// Builds the state requested on the `gen` command line:
///   mcs <d> | psi1 | psi2 | psi3 | mixed <d> | haar <d> <seed> |
///   ginibre <d> <r> <seed>
/// Throws UnknownState for unknown names or malformed arguments.
StateFile named_state(const std::vector<std::string>& name_and_args);

}  // namespace qcorr
