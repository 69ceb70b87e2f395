# BMW6 Library
