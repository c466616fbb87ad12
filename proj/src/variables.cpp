#include "pflab/variables.hpp"

#include <mutex>
#include <unordered_map>

#include "pflab/errors.hpp"

namespace pflab {
namespace vars {
namespace {

struct Registry {
  std::mutex mutex;
  std::vector<std::string> names;
  std::unordered_map<std::string, VarId> index;

  Registry() {
    const char* fixed[] = {"q", "a", "b", "c", "t", "z"};
    for (const char* n : fixed) add(n);
    for (int i = 1; i <= kIndexedCount; ++i) add("x" + std::to_string(i));
    for (int i = 1; i <= kIndexedCount; ++i) add("y" + std::to_string(i));
    add("s");
  }

  VarId add(const std::string& n) {
    auto it = index.find(n);
    if (it != index.end()) return it->second;
    VarId v = static_cast<VarId>(names.size());
    names.push_back(n);
    index.emplace(n, v);
    return v;
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

} // namespace

VarId id(const std::string& name) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mutex);
  return r.add(name);
}

const std::string& name(VarId v) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mutex);
  if (v >= r.names.size())
    throw IndexOutOfRange("unregistered variable id " + std::to_string(v));
  return r.names[v];
}

VarId q() { return 0; }
VarId a() { return 1; }
VarId b() { return 2; }
VarId c() { return 3; }
VarId t() { return 4; }
VarId z() { return 5; }
VarId s() { return static_cast<VarId>(6 + 2 * kIndexedCount); }

VarId x(int i) {
  if (i < 1 || i > kIndexedCount)
    throw IndexOutOfRange("x index " + std::to_string(i) + " outside pre-registered range");
  return static_cast<VarId>(6 + (i - 1));
}

VarId y(int i) {
  if (i < 1 || i > kIndexedCount)
    throw IndexOutOfRange("y index " + std::to_string(i) + " outside pre-registered range");
  return static_cast<VarId>(6 + kIndexedCount + (i - 1));
}

std::vector<VarId> x_block(int n) {
  std::vector<VarId> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(x(i));
  return out;
}

std::vector<VarId> y_block(int n) {
  std::vector<VarId> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(y(i));
  return out;
}

} // namespace vars
} // namespace pflab
