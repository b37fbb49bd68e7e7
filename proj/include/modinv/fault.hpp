#pragma once

// Fault injection used by the mutation smoke tests. Each site perturbs one
// coefficient of an engine computation while armed on the current thread.

namespace modinv::fault {

enum class Site {
  LucasBinom,
  PolyDelta,
  SliceDelta,
  SliceAction,
  PolyProduct,
};

bool armed(Site site) noexcept;

class Scoped {
 public:
  explicit Scoped(Site site);
  ~Scoped();
  Scoped(const Scoped&) = delete;
  Scoped& operator=(const Scoped&) = delete;

 private:
  Site site_;
};

}  // namespace modinv::fault
