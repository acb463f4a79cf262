#include <iostream>

int main() {
    std::cout << "qgv stub\n";
    return 0;
}
