#include <cstdio>

int main() {
  std::puts("scat: not wired up yet");
  return 0;
}
