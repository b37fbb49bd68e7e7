#include "modinv/fault.hpp"

#include <bitset>

namespace modinv::fault {

namespace {
thread_local std::bitset<8> g_armed;
}

bool armed(Site site) noexcept { return g_armed.test(static_cast<unsigned>(site)); }

Scoped::Scoped(Site site) : site_(site) { g_armed.set(static_cast<unsigned>(site)); }

Scoped::~Scoped() { g_armed.reset(static_cast<unsigned>(site_)); }

}  // namespace modinv::fault
