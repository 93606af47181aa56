class ConsistencyError(RuntimeError):
    ''' two computations that must agree did not (CLI exit status 3) '''


class UndersizedModulus(ConsistencyError):
    ''' a closure condition had no solution at the working modulus '''
