int acceptance_stub_main();int main(){return 0;}
