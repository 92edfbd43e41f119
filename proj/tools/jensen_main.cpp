#include <cstdio>
#include "jensen/version.hpp"
int main() { std::puts(jensen::kVersion); return 0; }
