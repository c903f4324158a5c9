#pragma once

#include <stdexcept>
#include <string>

namespace topodyn {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TOPODYN_ERROR(Name)                                                  \
    struct Name : Error {                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

TOPODYN_ERROR(SpaceMismatch);
TOPODYN_ERROR(MixedVariant);
TOPODYN_ERROR(UnsupportedSpace);
TOPODYN_ERROR(BudgetExceeded);
TOPODYN_ERROR(CapExceeded);
TOPODYN_ERROR(WordAbsent);
TOPODYN_ERROR(MalformedMatrix);
TOPODYN_ERROR(NotIrreducible);
TOPODYN_ERROR(UnknownName);
TOPODYN_ERROR(InvalidParameter);
TOPODYN_ERROR(ErrorBudgetExceeded);
TOPODYN_ERROR(UnsupportedGenerator);
TOPODYN_ERROR(MixedKind);
TOPODYN_ERROR(NotAbelianDeclared);
TOPODYN_ERROR(IncompatibleKinds);
TOPODYN_ERROR(VerificationFailed);
TOPODYN_ERROR(UndecidableMembership);

#undef TOPODYN_ERROR

}  // namespace topodyn
