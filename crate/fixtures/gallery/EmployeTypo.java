import java.sql.*;

class EmployeTypo {
    void typo(Connection connection) throws SQLException {
        // Typo in statement, table called "employee"
        connection.prepareStatement("Select * from employe");
    }
}
