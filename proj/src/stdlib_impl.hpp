#pragma once

#include <deque>
#include <unordered_map>

#include "arith/stdlib.hpp"

namespace arith::detail {

struct Entry {
  std::string name;
  PRTerm term;
  unsigned arity;
  NativeFn direct;
  bool pub;
};

class Registry {
public:
  const PRTerm& add(std::string name, PRTerm term, NativeFn direct, bool pub = false);
  const Entry* find(std::string_view name) const;
  const PRTerm& get(std::string_view name) const;

  std::deque<Entry> entries;
  KernelTable kernels;

private:
  std::unordered_map<std::string, std::size_t> index_;
};

void register_arith(Registry& r);
void register_coding(Registry& r);

}  // namespace arith::detail
