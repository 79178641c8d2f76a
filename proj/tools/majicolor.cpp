#include <cstdio>
int main(){ printf("majicolor placeholder\n"); return 0; }
