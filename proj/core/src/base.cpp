#include "ratbase/base.hpp"

#include "ratbase/error.hpp"

namespace ratbase {

RationalBase::RationalBase(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
    if (!(q_ > 1 && p_ > q_))
        throw Error(ErrorKind::OrderViolation,
                    "base requires p > q > 1, got p=" + p_.get_str() +
                        " q=" + q_.get_str());
    if (gcd(p_, q_) != 1)
        throw Error(ErrorKind::NotCoprime,
                    "base requires gcd(p, q) = 1, got p=" + p_.get_str() +
                        " q=" + q_.get_str());
}

} // namespace ratbase
