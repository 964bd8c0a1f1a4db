#pragma once

namespace hyperbessel {

// S kernels are odd (sinh / sin), C kernels are even (cosh / cos).
enum class KernelKind { S, C };

constexpr KernelKind kernel_kind_for(int q) noexcept {
  return (q % 2 != 0) ? KernelKind::S : KernelKind::C;
}

constexpr char to_char(KernelKind kind) noexcept {
  return kind == KernelKind::S ? 'S' : 'C';
}

}  // namespace hyperbessel
