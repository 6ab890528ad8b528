#include <cstdio>
int main(){ std::puts("fracdirac"); return 0; }
