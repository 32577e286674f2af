#include "agraded/agraded.hpp"
int main() { return 0; }
