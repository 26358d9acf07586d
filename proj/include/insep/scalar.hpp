#pragma once

namespace insep::detail {

// Classes with an is_zero() member hide the free is_zero(x) of their
// coefficient type; calling through here restores the ADL lookup.
template <class F>
bool coeff_is_zero(const F& x) {
  return is_zero(x);
}

}  // namespace insep::detail
