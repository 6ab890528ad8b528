#include <doctest.h>
int fracdirac_acceptance_placeholder;
int main(){return 0;}
